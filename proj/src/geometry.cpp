#include "hamcheck/geometry.hpp"

namespace hamcheck {

namespace {

constexpr Slot Up = Slot::Upper;
constexpr Slot Lo = Slot::Lower;

Tensor inverse_or_throw(const Tensor& m, const char* what)
{
    auto inv = inverse(m);
    if (!inv) {
        throw Degenerate(std::string(what) + " is degenerate (det vanishes identically)");
    }
    return std::move(*inv);
}

} // namespace

Connection Connection::transposed() const
{
    Tensor t = Tensor::generate(dim(), symbols.slots(),
                                [&](std::span<const int> x) { return symbols(x[0], x[2], x[1]); });
    return {std::move(t), flavor};
}

RationalExpr partial(const RationalExpr& e, int k) { return e.diff(Symbol::u(k + 1)); }

Tensor gradient(const Tensor& t)
{
    std::vector<Slot> slots = t.slots();
    slots.push_back(Lo);
    const int r = t.rank();
    return Tensor::generate(t.dim(), slots, [&](std::span<const int> x) {
        return partial(t.at(x.first(static_cast<std::size_t>(r))), x[static_cast<std::size_t>(r)]);
    });
}

Connection levi_civita(const Tensor& g_upper)
{
    const int n = g_upper.dim();
    Tensor gl = inverse_or_throw(g_upper, "metric");
    Tensor dgl = gradient(gl); // g_{ij,k}
    Tensor gam(n, {Up, Lo, Lo});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                RationalExpr sum;
                for (int s = 0; s < n; ++s) {
                    if (g_upper(i, s).is_zero()) {
                        continue;
                    }
                    RationalExpr c = dgl(s, j, k) + dgl(s, k, j) - dgl(j, k, s);
                    if (!c.is_zero()) {
                        sum += g_upper(i, s) * c;
                    }
                }
                sum *= RationalExpr(Rational(1, 2));
                gam(i, j, k) = sum;
                gam(i, k, j) = sum;
            }
        }
    }
    return {std::move(gam), ConnectionFlavor::Metric};
}

Tensor riemann(const Connection& conn)
{
    const Tensor& G = conn.symbols;
    const int n = conn.dim();
    Tensor dG = gradient(G); // Γ^i_{jk,l}
    return Tensor::generate(n, {Up, Lo, Lo, Lo}, [&](std::span<const int> x) {
        const int i = x[0], j = x[1], k = x[2], l = x[3];
        RationalExpr r = dG(i, j, l, k) - dG(i, j, k, l);
        for (int s = 0; s < n; ++s) {
            r += G(i, s, k) * G(s, j, l) - G(i, s, l) * G(s, j, k);
        }
        return r;
    });
}

Tensor b_from_metric(const Tensor& g_upper)
{
    Connection lc = levi_civita(g_upper);
    if (!riemann(lc).is_zero()) {
        throw PreconditionViolation("metric is not flat");
    }
    const int n = g_upper.dim();
    return Tensor::generate(n, {Up, Up, Lo}, [&](std::span<const int> x) {
        RationalExpr r;
        for (int s = 0; s < n; ++s) {
            r -= g_upper(x[0], s) * lc.symbols(x[1], s, x[2]);
        }
        return r;
    });
}

Connection symplectic_connection(const Tensor& omega)
{
    const int n = omega.dim();
    Tensor wl = inverse_or_throw(omega, "Poisson bivector");
    Tensor dw = gradient(omega);
    Tensor gam = Tensor::generate(n, {Up, Lo, Lo}, [&](std::span<const int> x) {
        const int j = x[0], i = x[1], k = x[2];
        RationalExpr r;
        for (int a = 0; a < n; ++a) {
            r += wl(i, a) * dw(a, j, k);
        }
        return r * RationalExpr(Rational(-1, 2));
    });
    return {std::move(gam), ConnectionFlavor::Symplectic};
}

Tensor covariant_derivative(const Tensor& t, const Connection& conn)
{
    const int r = t.rank();
    if (r > 3) {
        throw Error("covariant derivative implemented for rank ≤ 3 only");
    }
    if (t.dim() != conn.dim()) {
        throw DimensionMismatch("tensor and connection dimensions differ");
    }
    const int n = t.dim();
    const Tensor& G = conn.symbols;
    std::vector<Slot> slots = t.slots();
    slots.push_back(Lo);
    return Tensor::generate(n, slots, [&](std::span<const int> x) {
        const int k = x[static_cast<std::size_t>(r)];
        std::vector<int> idx(x.begin(), x.begin() + r);
        RationalExpr out = partial(t.at(idx), k);
        for (int slot = 0; slot < r; ++slot) {
            const int a = idx[static_cast<std::size_t>(slot)];
            std::vector<int> moved = idx;
            for (int m = 0; m < n; ++m) {
                moved[static_cast<std::size_t>(slot)] = m;
                const RationalExpr& tm = t.at(moved);
                if (tm.is_zero()) {
                    continue;
                }
                if (t.slots()[static_cast<std::size_t>(slot)] == Up) {
                    out += G(a, k, m) * tm;
                } else {
                    out -= G(m, k, a) * tm;
                }
            }
        }
        return out;
    });
}

Tensor raise_last(const Tensor& d, const Tensor& form)
{
    const int r = d.rank();
    const int n = d.dim();
    std::vector<Slot> slots{Up};
    slots.insert(slots.end(), d.slots().begin(), d.slots().end() - 1);
    return Tensor::generate(n, slots, [&](std::span<const int> x) {
        std::vector<int> idx(x.begin() + 1, x.end());
        idx.push_back(0);
        RationalExpr out;
        for (int s = 0; s < n; ++s) {
            if (form(x[0], s).is_zero()) {
                continue;
            }
            idx[static_cast<std::size_t>(r - 1)] = s;
            out += form(x[0], s) * d.at(idx);
        }
        return out;
    });
}

Diffeomorphism::Diffeomorphism(std::vector<RationalExpr> forward, std::vector<RationalExpr> inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse))
{
    const int n = dim();
    if (static_cast<int>(inverse_.size()) != n) {
        throw DimensionMismatch("forward and inverse maps have different lengths");
    }
    std::map<Symbol, RationalExpr> to_new;
    for (int i = 0; i < n; ++i) {
        to_old_.emplace(Symbol::u(i + 1), inverse_[static_cast<std::size_t>(i)]);
        to_new.emplace(Symbol::u(i + 1), forward_[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < n; ++i) {
        RationalExpr id(Symbol::u(i + 1));
        if (forward_[static_cast<std::size_t>(i)].substitute(to_old_) != id
            || inverse_[static_cast<std::size_t>(i)].substitute(to_new) != id) {
            throw Error("supplied inverse does not invert the coordinate change");
        }
    }
    jacobian_ = Tensor::generate(n, {Up, Lo}, [&](std::span<const int> x) {
        return partial(forward_[static_cast<std::size_t>(x[0])], x[1]);
    });
}

Diffeomorphism Diffeomorphism::identity(int n)
{
    std::vector<RationalExpr> id;
    for (int i = 1; i <= n; ++i) {
        id.emplace_back(Symbol::u(i));
    }
    return Diffeomorphism(id, id);
}

Diffeomorphism Diffeomorphism::linear(const Tensor& a)
{
    auto inv = hamcheck::inverse(a);
    if (!inv) {
        throw Degenerate("linear map is singular");
    }
    const int n = a.dim();
    std::vector<RationalExpr> fwd(static_cast<std::size_t>(n)), bwd(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            fwd[static_cast<std::size_t>(i)] += a(i, j) * RationalExpr(Symbol::u(j + 1));
            bwd[static_cast<std::size_t>(i)] += (*inv)(i, j) * RationalExpr(Symbol::u(j + 1));
        }
    }
    return Diffeomorphism(std::move(fwd), std::move(bwd));
}

RationalExpr Diffeomorphism::pull(const RationalExpr& e) const { return e.substitute(to_old_); }

Tensor Diffeomorphism::pull(const Tensor& t) const
{
    return t.map([this](const RationalExpr& e) { return pull(e); });
}

QuasilinearSystem transform(const QuasilinearSystem& sys, const Diffeomorphism& phi)
{
    if (sys.n != phi.dim()) {
        throw DimensionMismatch("system and coordinate change have different dimensions");
    }
    const Tensor& J = phi.jacobian();
    Tensor Ji = inverse_or_throw(J, "Jacobian");
    const int n = sys.n;
    Tensor V = matmul(matmul(J, sys.V), Ji);
    V = Tensor::generate(n, {Up, Lo}, [&](std::span<const int> x) { return V(x[0], x[1]); });
    Tensor W = Tensor::generate(n, {Up}, [&](std::span<const int> x) {
        RationalExpr r;
        for (int i = 0; i < n; ++i) {
            r += J(x[0], i) * sys.W(i);
        }
        return r;
    });
    return {n, phi.pull(V), phi.pull(W)};
}

NonHomogeneousOperator transform(const NonHomogeneousOperator& op, const Diffeomorphism& phi)
{
    const int n = op.dim();
    if (n != phi.dim()) {
        throw DimensionMismatch("operator and coordinate change have different dimensions");
    }
    const Tensor& J = phi.jacobian();
    Tensor Ji = inverse_or_throw(J, "Jacobian");
    Tensor dJ = gradient(J); // ∂_k J^c_j
    auto bivector = [&](const Tensor& m) {
        return Tensor::generate(n, {Up, Up}, [&](std::span<const int> x) {
            RationalExpr r;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (!m(i, j).is_zero()) {
                        r += J(x[0], i) * m(i, j) * J(x[1], j);
                    }
                }
            }
            return r;
        });
    };
    const Tensor& g = op.first.g;
    const Tensor& b = op.first.b;
    // b̄^{ac}_k before the final J⁻¹ on the lower index.
    Tensor pre = Tensor::generate(n, {Up, Up, Lo}, [&](std::span<const int> x) {
        const int a = x[0], c = x[1], k = x[2];
        RationalExpr r;
        for (int i = 0; i < n; ++i) {
            if (J(a, i).is_zero()) {
                continue;
            }
            RationalExpr inner;
            for (int j = 0; j < n; ++j) {
                if (!g(i, j).is_zero()) {
                    inner += g(i, j) * dJ(c, j, k);
                }
                if (!b(i, j, k).is_zero()) {
                    inner += b(i, j, k) * J(c, j);
                }
            }
            r += J(a, i) * inner;
        }
        return r;
    });
    Tensor bbar = Tensor::generate(n, {Up, Up, Lo}, [&](std::span<const int> x) {
        RationalExpr r;
        for (int k = 0; k < n; ++k) {
            if (!pre(x[0], x[1], k).is_zero()) {
                r += pre(x[0], x[1], k) * Ji(k, x[2]);
            }
        }
        return r;
    });
    NonHomogeneousOperator out;
    out.first.g = phi.pull(bivector(g));
    out.first.b = phi.pull(bbar);
    out.zero.omega = phi.pull(bivector(op.zero.omega));
    return out;
}

} // namespace hamcheck
