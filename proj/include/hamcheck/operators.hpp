#pragma once

#include "hamcheck/model.hpp"
#include "hamcheck/report.hpp"

namespace hamcheck {

/// Skew-symmetry (thmOmega.1) and the Jacobi cyclic sum (thmOmega.2).
ReportSet check_ultralocal(const UltralocalOperator& op);

/// Curvature-type tensor
/// g^{is}(b^{jr}_{s,k} − b^{jr}_{k,s}) + b^{ij}_s b^{sr}_k − b^{ir}_s b^{sj}_k, indexed (i,j,r,k).
Tensor curvature_form(const FirstOrderOperator& op);

/// Reports thmA.1 … thmA.5. The fifth condition has a printed form whose
/// second bracket reads b^{jr}_{s,q} − b^{jr}_{q,k}; the corrected form uses
/// the curvature tensor at (i,j,r,q). Both are evaluated and a note is
/// attached when their verdicts differ.
ReportSet check_first_order_hamiltonian(const FirstOrderOperator& op, ConditionForm form = ConditionForm::Verbatim);

/// Φ^{ijk} = g^{is}ω^{jk}_{,s} − b^{ij}_s ω^{sk} − b^{ik}_s ω^{js}.
Tensor phi_tensor(const NonHomogeneousOperator& op);

/// First-order and ultralocal reports plus thm1.phi-symmetry and
/// thm1.phi-derivative. The printed derivative condition cycles only the
/// first term; the corrected one cycles both.
ReportSet check_nonhomogeneous_hamiltonian(const NonHomogeneousOperator& op,
                                           ConditionForm form = ConditionForm::Verbatim);

/// fm.1: ∇^iω^{jk} + ∇^jω^{ik}; fm.2: ∇_s∇_kω^{ij}, for the Levi-Civita
/// connection of g. Throws Degenerate when det g ≡ 0.
ReportSet check_ferapontov_mokhov(const NonHomogeneousOperator& op);

/// Note for a determinant that is not identically zero but not constant.
std::optional<std::string> locus_warning(const char* what, const RationalExpr& determinant);

} // namespace hamcheck
