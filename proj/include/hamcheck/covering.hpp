#pragma once

#include "hamcheck/jet.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hamcheck {

using JetVector = std::vector<RationalExpr>;

/// ℓ_F(φ)^i = D_tφ^i − (V^i_{j,l}u^j_x + W^i_{,l})φ^l − V^i_j D_xφ^j.
class Linearization {
public:
    explicit Linearization(const QuasilinearSystem& sys);
    /// D_t is taken on-shell with `ev`, which must define every symbol in φ.
    JetVector apply(const JetVector& phi, const Evolution& ev) const;
    JetVector apply(const JetVector& phi) const;
    /// (V^i_{j,l}u^j_x + W^i_{,l}) at (i,l).
    const Tensor& zero_order() const { return zero_order_; }

private:
    QuasilinearSystem sys_;
    Tensor zero_order_;
};

/// ℓ_F*(ψ)_i = −D_tψ_i + (V^k_{i,j}u^j_x − V^k_{j,i}u^j_x − W^k_{,i})ψ_k + V^k_i D_xψ_k.
class AdjointLinearization {
public:
    explicit AdjointLinearization(const QuasilinearSystem& sys);
    JetVector apply(const JetVector& psi, const Evolution& ev) const;
    JetVector apply(const JetVector& psi) const;
    /// ℓ_F*(ψ) + D_tψ: everything except the time derivative.
    JetVector spatial_part(const JetVector& psi) const;

private:
    QuasilinearSystem sys_;
    Tensor zero_order_; // (k,i)
};

/// p_{i,t} = (V^k_{i,j}u^j_x − V^k_{j,i}u^j_x − W^k_{,i})p_k + V^k_i p_{k,x}.
CoveringSystem cotangent_covering(const QuasilinearSystem& sys);
/// q^i_t = (V^i_{j,l}u^j_x + W^i_{,l})q^l + V^i_j q^j_x.
CoveringSystem tangent_covering(const QuasilinearSystem& sys);

/// A(p)^i = g^{ij}p_{j,x} + b^{ij}_k u^k_x p_j + ω^{ij}p_j.
JetVector operator_on_covectors(const NonHomogeneousOperator& op);

/// Coefficients of ℓ_F(A(p)) on the cotangent covering, grouped by jet
/// monomial class. Every class tensor has the row index i first and the
/// covector index j second, followed by u-jet indices.
struct OracleResidual {
    /// Class names in fixed order: p_xx, p_x*u_x, p*u_xx, p*u_x*u_x, p_x, p*u_x, p.
    std::vector<std::pair<std::string, Tensor>> classes;
    /// The full expansion, one entry per row i.
    JetVector expansion;

    bool pass() const;
    const Tensor& at(std::string_view name) const;
};

/// Expands ℓ_F(A(p)) and collects it. Throws Error if a jet of order ≥ 3
/// or a monomial outside the seven classes survives.
OracleResidual oracle(const QuasilinearSystem& sys, const NonHomogeneousOperator& op);

} // namespace hamcheck
