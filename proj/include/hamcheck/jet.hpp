#pragma once

#include "hamcheck/model.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hamcheck {

/// Total x-derivative: u^i_σ → u^i_{σ+1}, p_{i,σ} → p_{i,σ+1}, q^i_σ → q^i_{σ+1},
/// parameters → 0.
RationalExpr total_x(const RationalExpr& e);
RationalExpr total_x(const RationalExpr& e, int times);
Tensor total_x(const Tensor& t);

/// A quasilinear system augmented with the evolution of one family of
/// auxiliary jet variables (covectors p or vectors q).
struct CoveringSystem {
    QuasilinearSystem base;
    SymbolKind family = SymbolKind::Covector;
    /// evolution[i] is the right-hand side of the t-derivative of the
    /// order-0 variable with index i+1.
    std::vector<RationalExpr> evolution;
};

/// On-shell time derivative. t-derivatives of u-jets come from the system,
/// those of auxiliary variables from an optional covering; higher jets use
/// D_t∘D_x = D_x∘D_t. There is no free t-jet coordinate.
class Evolution {
public:
    explicit Evolution(const QuasilinearSystem& sys);
    explicit Evolution(const CoveringSystem& covering);

    int dim() const { return n_; }
    /// D_t of a single jet coordinate. Throws Error when none is defined.
    RationalExpr of(Symbol s) const;
    RationalExpr total_t(const RationalExpr& e) const;

private:
    int n_;
    std::vector<RationalExpr> u_rhs_;
    std::optional<SymbolKind> aux_family_;
    std::vector<RationalExpr> aux_rhs_;
    // Cached D_t of order-1 and order-2 jets; higher orders are derived on demand.
    std::map<Symbol, RationalExpr> cache_;
};

/// Symbol families for collect().
enum JetFamily : unsigned {
    kUJets = 1u,      // u^i_σ, σ ≥ 1
    kCovectors = 2u,  // p_{i,σ}, σ ≥ 0
    kVectors = 4u,    // q^i_σ, σ ≥ 0
};

bool in_family(Symbol s, unsigned families);

/// Splits e as Σ coeff_m · m over monomials m in the listed families, with
/// coefficients free of them. Throws Error if e is not polynomial in the
/// families (a family symbol in the denominator).
std::map<Monomial, RationalExpr> collect(const RationalExpr& e, unsigned families);

/// Highest x-derivative order of any jet symbol in e (0 if none).
int max_jet_order(const RationalExpr& e);

} // namespace hamcheck
