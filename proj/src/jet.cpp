#include "hamcheck/jet.hpp"

namespace hamcheck {

RationalExpr total_x(const RationalExpr& e)
{
    RationalExpr out;
    for (Symbol s : e.symbols()) {
        if (s.is_parameter()) {
            continue;
        }
        RationalExpr d = e.diff(s);
        if (!d.is_zero()) {
            out += d * RationalExpr(s.shifted());
        }
    }
    return out;
}

RationalExpr total_x(const RationalExpr& e, int times)
{
    RationalExpr r = e;
    for (int k = 0; k < times; ++k) {
        r = total_x(r);
    }
    return r;
}

Tensor total_x(const Tensor& t)
{
    return t.map([](const RationalExpr& e) { return total_x(e); });
}

Evolution::Evolution(const QuasilinearSystem& sys) : n_(sys.n)
{
    sys.validate();
    u_rhs_.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        RationalExpr rhs = sys.W(i);
        for (int j = 0; j < n_; ++j) {
            if (!sys.V(i, j).is_zero()) {
                rhs += sys.V(i, j) * RationalExpr(Symbol::u(j + 1, 1));
            }
        }
        u_rhs_.push_back(std::move(rhs));
    }
    for (int order = 1; order <= 2; ++order) {
        for (int i = 1; i <= n_; ++i) {
            cache_.emplace(Symbol::u(i, order), total_x(u_rhs_[static_cast<std::size_t>(i - 1)], order));
        }
    }
}

Evolution::Evolution(const CoveringSystem& covering) : Evolution(covering.base)
{
    if (static_cast<int>(covering.evolution.size()) != n_) {
        throw DimensionMismatch("covering evolution has wrong length");
    }
    if (covering.family != SymbolKind::Covector && covering.family != SymbolKind::Vector) {
        throw Error("covering family must be covector or vector");
    }
    aux_family_ = covering.family;
    aux_rhs_ = covering.evolution;
    for (int order = 1; order <= 2; ++order) {
        for (int i = 1; i <= n_; ++i) {
            Symbol s = covering.family == SymbolKind::Covector ? Symbol::p(i, order) : Symbol::q(i, order);
            cache_.emplace(s, total_x(aux_rhs_[static_cast<std::size_t>(i - 1)], order));
        }
    }
}

RationalExpr Evolution::of(Symbol s) const
{
    if (s.is_parameter()) {
        return RationalExpr();
    }
    if (s.index() > n_) {
        throw Error("no evolution for " + s.name() + ": index exceeds dimension");
    }
    const std::vector<RationalExpr>* rhs = nullptr;
    if (s.kind() == SymbolKind::Field) {
        rhs = &u_rhs_;
    } else if (aux_family_ && s.kind() == *aux_family_) {
        rhs = &aux_rhs_;
    } else {
        throw Error("no evolution defined for " + s.name());
    }
    if (s.order() == 0) {
        return (*rhs)[static_cast<std::size_t>(s.index() - 1)];
    }
    if (auto it = cache_.find(s); it != cache_.end()) {
        return it->second;
    }
    return total_x((*rhs)[static_cast<std::size_t>(s.index() - 1)], s.order());
}

RationalExpr Evolution::total_t(const RationalExpr& e) const
{
    RationalExpr out;
    for (Symbol s : e.symbols()) {
        if (s.is_parameter()) {
            continue;
        }
        RationalExpr d = e.diff(s);
        if (!d.is_zero()) {
            out += d * of(s);
        }
    }
    return out;
}

bool in_family(Symbol s, unsigned families)
{
    switch (s.kind()) {
    case SymbolKind::Field:
        return (families & kUJets) != 0 && s.order() > 0;
    case SymbolKind::Covector:
        return (families & kCovectors) != 0;
    case SymbolKind::Vector:
        return (families & kVectors) != 0;
    case SymbolKind::Parameter:
        return false;
    }
    return false;
}

std::map<Monomial, RationalExpr> collect(const RationalExpr& e, unsigned families)
{
    for (auto v : e.denominator().variables()) {
        if (in_family(Symbol::from_key(v), families)) {
            throw Error("expression is not polynomial in " + Symbol::from_key(v).name());
        }
    }
    std::map<Monomial, std::vector<Term>> parts;
    for (const auto& t : e.numerator().terms()) {
        Monomial key;
        Monomial rest;
        for (const auto& f : t.mono.factors()) {
            Monomial m = Monomial::of(Symbol::from_key(f.var), f.exp);
            if (in_family(Symbol::from_key(f.var), families)) {
                key = key * m;
            } else {
                rest = rest * m;
            }
        }
        parts[key].push_back({rest, t.coef});
    }
    std::map<Monomial, RationalExpr> out;
    for (auto& [key, terms] : parts) {
        RationalExpr c = RationalExpr::fraction(Polynomial::from_terms(std::move(terms)), e.denominator());
        if (!c.is_zero()) {
            out.emplace(key, std::move(c));
        }
    }
    return out;
}

int max_jet_order(const RationalExpr& e)
{
    int m = 0;
    for (Symbol s : e.symbols()) {
        if (!s.is_parameter()) {
            m = std::max(m, s.order());
        }
    }
    return m;
}

} // namespace hamcheck
