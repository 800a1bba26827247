#pragma once

#include "hamcheck/model.hpp"

#include <vector>

namespace hamcheck {

enum class ConnectionFlavor { Metric, Symplectic };

/// Γ^i_{jk} stored with slots (upper, lower, lower). The covariant
/// derivative ∇_k uses the first lower slot as the derivative index:
/// ∇_k X^i = X^i_{,k} + Γ^i_{km} X^m.
struct Connection {
    Tensor symbols;
    ConnectionFlavor flavor = ConnectionFlavor::Metric;

    int dim() const { return symbols.dim(); }
    /// Γ^i_{kj}: swaps the two lower slots.
    Connection transposed() const;
};

/// ∂/∂u^k of every entry; the new lower slot is appended last.
Tensor gradient(const Tensor& t);
RationalExpr partial(const RationalExpr& e, int k);

/// Christoffel symbols of the metric g_{ij} = (g^{ij})^{-1}.
/// Throws Degenerate when det g ≡ 0.
Connection levi_civita(const Tensor& g_upper);

/// R^i_{jkl} = Γ^i_{jl,k} − Γ^i_{jk,l} + Γ^i_{sk}Γ^s_{jl} − Γ^i_{sl}Γ^s_{jk}.
Tensor riemann(const Connection& conn);

/// b^{ij}_k = −g^{is} Γ^j_{sk}. Throws Degenerate for det g ≡ 0 and
/// PreconditionViolation for a metric that is not flat.
Tensor b_from_metric(const Tensor& g_upper);

/// Γ̃^j_{ik} = −½ ω_{ia} ω^{aj}_{,k}, stored as symbols(j, i, k).
/// Throws Degenerate when det ω ≡ 0.
Connection symplectic_connection(const Tensor& omega);

/// ∇_k t for a tensor of rank 0..3 with declared slot variance; the
/// derivative index is appended as the last (lower) slot.
Tensor covariant_derivative(const Tensor& t, const Connection& conn);

/// R^{i…} = form^{is} D_{…s}: contracts the last slot of `d` with the
/// second index of `form` and puts the raised index first.
Tensor raise_last(const Tensor& d, const Tensor& form);

/// A coordinate change ū = φ(u) with a user-supplied inverse. Both maps
/// are written in the symbols u1..un; construction verifies φ∘φ⁻¹ and
/// φ⁻¹∘φ are the identity.
class Diffeomorphism {
public:
    Diffeomorphism(std::vector<RationalExpr> forward, std::vector<RationalExpr> inverse);
    static Diffeomorphism identity(int n);
    /// ū = A u for an invertible constant matrix A.
    static Diffeomorphism linear(const Tensor& a);

    int dim() const { return static_cast<int>(forward_.size()); }
    const std::vector<RationalExpr>& forward() const { return forward_; }
    const std::vector<RationalExpr>& inverse() const { return inverse_; }
    /// J^a_i = ∂ū^a/∂u^i as functions of u.
    const Tensor& jacobian() const { return jacobian_; }
    /// Expresses a function of u in the new coordinates.
    RationalExpr pull(const RationalExpr& e) const;
    Tensor pull(const Tensor& t) const;

private:
    std::vector<RationalExpr> forward_;
    std::vector<RationalExpr> inverse_;
    Tensor jacobian_;
    std::map<Symbol, RationalExpr> to_old_;
};

QuasilinearSystem transform(const QuasilinearSystem& sys, const Diffeomorphism& phi);
NonHomogeneousOperator transform(const NonHomogeneousOperator& op, const Diffeomorphism& phi);

} // namespace hamcheck
