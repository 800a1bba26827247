#pragma once

#include "hamcheck/model.hpp"
#include "hamcheck/report.hpp"

namespace hamcheck {

/// Zero-order system u_t = W(u) against an ultralocal operator.
/// 0order.direct is ω^{ij}_{,s}W^s − ω^{js}W^i_{,s} − ω^{is}W^j_{,s} as
/// printed, or with the middle term ω^{sj}W^i_{,s} in corrected form. When
/// det ω ≢ 0, 0order.covariant evaluates ∇̃^iW^j − ∇̃^jW^i and a note records
/// whether both verdicts agree. Throws PreconditionViolation if V ≢ 0.
ReportSet check_0order(const QuasilinearSystem& sys, const UltralocalOperator& op,
                       ConditionForm form = ConditionForm::Verbatim);

/// Homogeneous system (W ≡ 0) with a first-order operator: thm8.1, thm8.2.
/// Throws PreconditionViolation if W ≢ 0; a non-Hamiltonian operator only
/// clears the operator_hamiltonian flag.
ReportSet check_homogeneous(const QuasilinearSystem& sys, const FirstOrderOperator& op);

/// Tensors obtained in the homogeneous derivation alongside thm8.1/thm8.2:
/// the coefficient of p_{j,x}u^m_x (indexed i,j,m) and the symmetric
/// coefficient of p_j u^m_x u^l_x (indexed i,j,m,l). Both vanish whenever
/// thm8.1, thm8.2 hold for a Hamiltonian operator.
Tensor homogeneous_mixed_tensor(const QuasilinearSystem& sys, const FirstOrderOperator& op);
Tensor homogeneous_quadratic_tensor(const QuasilinearSystem& sys, const FirstOrderOperator& op);

/// tsarev.1: g_{is}V^s_j − g_{js}V^s_i; tsarev.2: ∇_iV^j_k − ∇_kV^j_i.
/// Throws Degenerate for det g ≡ 0, PreconditionViolation for W ≢ 0.
ReportSet check_tsarev(const QuasilinearSystem& sys, const Tensor& g_upper);

/// T^{ij}_k as printed.
Tensor t_tensor(const QuasilinearSystem& sys, const NonHomogeneousOperator& op);

/// thmcomp.1 … thmcomp.5. Valid for any leading coefficient.
ReportSet check_nonhom_compat(const QuasilinearSystem& sys, const NonHomogeneousOperator& op,
                              ConditionForm form = ConditionForm::Verbatim);

/// cor2.1 … cor2.5. Throws Degenerate for det g ≡ 0. When det ω ≡ 0 the
/// symplectic form of cor2.4 is unavailable and the equivalent ω-only
/// tensor W^i_{,s}ω^{sj} + W^j_{,s}ω^{is} + ω^{ji}_{,s}W^s is used, with a note.
ReportSet check_nonhom_compat_nondeg(const QuasilinearSystem& sys, const NonHomogeneousOperator& op,
                                     ConditionForm form = ConditionForm::Verbatim);

/// Chooses cor2 when det g ≢ 0 and thmcomp otherwise; the set's notes name
/// the path taken.
ReportSet check_compat(const QuasilinearSystem& sys, const NonHomogeneousOperator& op,
                       ConditionForm form = ConditionForm::Verbatim);

} // namespace hamcheck
