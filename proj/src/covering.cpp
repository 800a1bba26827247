#include "hamcheck/covering.hpp"

#include "hamcheck/geometry.hpp"

namespace hamcheck {

namespace {

constexpr Slot Up = Slot::Upper;
constexpr Slot Lo = Slot::Lower;

using Idx = std::span<const int>;

RationalExpr ux(int j) { return RationalExpr(Symbol::u(j + 1, 1)); }

void require_length(const JetVector& v, int n)
{
    if (static_cast<int>(v.size()) != n) {
        throw DimensionMismatch("jet vector has wrong length");
    }
}

} // namespace

Linearization::Linearization(const QuasilinearSystem& sys) : sys_(sys)
{
    sys_.validate();
    const int n = sys.n;
    Tensor dV = gradient(sys.V);
    Tensor dW = gradient(sys.W);
    zero_order_ = Tensor::generate(n, {Up, Lo}, [&](Idx x) {
        RationalExpr e = dW(x[0], x[1]);
        for (int j = 0; j < n; ++j) {
            if (!dV(x[0], j, x[1]).is_zero()) {
                e += dV(x[0], j, x[1]) * ux(j);
            }
        }
        return e;
    });
}

JetVector Linearization::apply(const JetVector& phi, const Evolution& ev) const
{
    const int n = sys_.n;
    require_length(phi, n);
    JetVector dx(phi.size());
    for (std::size_t j = 0; j < phi.size(); ++j) {
        dx[j] = total_x(phi[j]);
    }
    JetVector out;
    for (int i = 0; i < n; ++i) {
        RationalExpr e = ev.total_t(phi[static_cast<std::size_t>(i)]);
        for (int l = 0; l < n; ++l) {
            const auto L = static_cast<std::size_t>(l);
            if (!zero_order_(i, l).is_zero() && !phi[L].is_zero()) {
                e -= zero_order_(i, l) * phi[L];
            }
            if (!sys_.V(i, l).is_zero() && !dx[L].is_zero()) {
                e -= sys_.V(i, l) * dx[L];
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

JetVector Linearization::apply(const JetVector& phi) const { return apply(phi, Evolution(sys_)); }

AdjointLinearization::AdjointLinearization(const QuasilinearSystem& sys) : sys_(sys)
{
    sys_.validate();
    const int n = sys.n;
    Tensor dV = gradient(sys.V); // V^k_{i,j} = dV(k,i,j)
    Tensor dW = gradient(sys.W);
    zero_order_ = Tensor::generate(n, {Up, Lo}, [&](Idx x) {
        const int k = x[0], i = x[1];
        RationalExpr e = -dW(k, i);
        for (int j = 0; j < n; ++j) {
            RationalExpr c = dV(k, i, j) - dV(k, j, i);
            if (!c.is_zero()) {
                e += c * ux(j);
            }
        }
        return e;
    });
}

JetVector AdjointLinearization::spatial_part(const JetVector& psi) const
{
    const int n = sys_.n;
    require_length(psi, n);
    JetVector out;
    for (int i = 0; i < n; ++i) {
        RationalExpr e;
        for (int k = 0; k < n; ++k) {
            const auto K = static_cast<std::size_t>(k);
            if (psi[K].is_zero()) {
                continue;
            }
            if (!zero_order_(k, i).is_zero()) {
                e += zero_order_(k, i) * psi[K];
            }
            if (!sys_.V(k, i).is_zero()) {
                e += sys_.V(k, i) * total_x(psi[K]);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

JetVector AdjointLinearization::apply(const JetVector& psi, const Evolution& ev) const
{
    JetVector out = spatial_part(psi);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= ev.total_t(psi[i]);
    }
    return out;
}

JetVector AdjointLinearization::apply(const JetVector& psi) const { return apply(psi, Evolution(sys_)); }

CoveringSystem cotangent_covering(const QuasilinearSystem& sys)
{
    JetVector p;
    for (int i = 1; i <= sys.n; ++i) {
        p.emplace_back(Symbol::p(i));
    }
    return {sys, SymbolKind::Covector, AdjointLinearization(sys).spatial_part(p)};
}

CoveringSystem tangent_covering(const QuasilinearSystem& sys)
{
    Linearization lin(sys);
    const int n = sys.n;
    JetVector rhs;
    for (int i = 0; i < n; ++i) {
        RationalExpr e;
        for (int l = 0; l < n; ++l) {
            if (!lin.zero_order()(i, l).is_zero()) {
                e += lin.zero_order()(i, l) * RationalExpr(Symbol::q(l + 1));
            }
            if (!sys.V(i, l).is_zero()) {
                e += sys.V(i, l) * RationalExpr(Symbol::q(l + 1, 1));
            }
        }
        rhs.push_back(std::move(e));
    }
    return {sys, SymbolKind::Vector, std::move(rhs)};
}

JetVector operator_on_covectors(const NonHomogeneousOperator& op)
{
    const int n = op.dim();
    JetVector a;
    for (int i = 0; i < n; ++i) {
        RationalExpr e;
        for (int j = 0; j < n; ++j) {
            RationalExpr pj(Symbol::p(j + 1));
            if (!op.first.g(i, j).is_zero()) {
                e += op.first.g(i, j) * RationalExpr(Symbol::p(j + 1, 1));
            }
            if (!op.zero.omega(i, j).is_zero()) {
                e += op.zero.omega(i, j) * pj;
            }
            for (int k = 0; k < n; ++k) {
                if (!op.first.b(i, j, k).is_zero()) {
                    e += op.first.b(i, j, k) * ux(k) * pj;
                }
            }
        }
        a.push_back(std::move(e));
    }
    return a;
}

bool OracleResidual::pass() const
{
    for (const auto& [name, t] : classes) {
        if (!t.is_zero()) {
            return false;
        }
    }
    return true;
}

const Tensor& OracleResidual::at(std::string_view name) const
{
    for (const auto& [k, t] : classes) {
        if (k == name) {
            return t;
        }
    }
    throw std::out_of_range("no oracle class " + std::string(name));
}

OracleResidual oracle(const QuasilinearSystem& sys, const NonHomogeneousOperator& op)
{
    require_same_dimension(sys, op);
    const int n = sys.n;
    Evolution ev(cotangent_covering(sys));
    JetVector expansion = Linearization(sys).apply(operator_on_covectors(op), ev);

    Tensor pxx(n, {Up, Lo});
    Tensor px_ux(n, {Up, Lo, Lo});
    Tensor p_uxx(n, {Up, Lo, Lo});
    Tensor p_ux_ux(n, {Up, Lo, Lo, Lo});
    Tensor px(n, {Up, Lo});
    Tensor p_ux(n, {Up, Lo, Lo});
    Tensor p0(n, {Up, Lo});
    const RationalExpr half(Rational(1, 2));

    for (int i = 0; i < n; ++i) {
        const RationalExpr& e = expansion[static_cast<std::size_t>(i)];
        if (max_jet_order(e) >= 3) {
            throw Error("internal error: jet of order three survives in the oracle expansion");
        }
        for (const auto& [mono, coef] : collect(e, kUJets | kCovectors)) {
            int j = -1;
            int p_order = -1;
            std::vector<std::pair<Symbol, std::uint32_t>> ujets;
            for (const auto& f : mono.factors()) {
                Symbol s = Symbol::from_key(f.var);
                if (s.kind() == SymbolKind::Covector) {
                    if (j >= 0 || f.exp != 1) {
                        throw Error("internal error: oracle expansion is not linear in p");
                    }
                    j = s.index() - 1;
                    p_order = s.order();
                } else {
                    ujets.emplace_back(s, f.exp);
                }
            }
            if (j < 0) {
                throw Error("internal error: oracle term free of p");
            }
            bool ok = true;
            if (ujets.empty()) {
                Tensor* t = p_order == 0 ? &p0 : p_order == 1 ? &px : p_order == 2 ? &pxx : nullptr;
                ok = t != nullptr;
                if (ok) {
                    (*t)(i, j) += coef;
                }
            } else if (ujets.size() == 1 && ujets[0].second == 1) {
                const Symbol s = ujets[0].first;
                const int k = s.index() - 1;
                if (s.order() == 1 && p_order == 0) {
                    p_ux(i, j, k) += coef;
                } else if (s.order() == 1 && p_order == 1) {
                    px_ux(i, j, k) += coef;
                } else if (s.order() == 2 && p_order == 0) {
                    p_uxx(i, j, k) += coef;
                } else {
                    ok = false;
                }
            } else if (p_order == 0 && ujets.size() == 1 && ujets[0].second == 2 && ujets[0].first.order() == 1) {
                const int k = ujets[0].first.index() - 1;
                p_ux_ux(i, j, k, k) += coef;
            } else if (p_order == 0 && ujets.size() == 2 && ujets[0].second == 1 && ujets[1].second == 1
                       && ujets[0].first.order() == 1 && ujets[1].first.order() == 1) {
                const int k = ujets[0].first.index() - 1;
                const int l = ujets[1].first.index() - 1;
                p_ux_ux(i, j, k, l) += coef * half;
                p_ux_ux(i, j, l, k) += coef * half;
            } else {
                ok = false;
            }
            if (!ok) {
                throw Error("internal error: unexpected jet monomial " + mono.to_string() + " in the oracle expansion");
            }
        }
    }
    OracleResidual out;
    out.classes = {{"p_xx", pxx}, {"p_x*u_x", px_ux}, {"p*u_xx", p_uxx}, {"p*u_x*u_x", p_ux_ux},
                   {"p_x", px},   {"p*u_x", p_ux},   {"p", p0}};
    out.expansion = std::move(expansion);
    return out;
}

} // namespace hamcheck
