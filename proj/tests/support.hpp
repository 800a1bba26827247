#pragma once

// Test-only generators: seeded random expressions and Hamiltonian systems
// built from densities.

#include "hamcheck/corpus.hpp"
#include "hamcheck/geometry.hpp"
#include "hamcheck/parser.hpp"

#include <random>
#include <string>
#include <vector>

namespace hamcheck::testing {

inline RationalExpr expr(const std::string& s, int n = 3, std::vector<std::string> params = {})
{
    ParseContext c;
    c.dimension = n;
    c.parameters = std::move(params);
    return parse_expr(s, c);
}

inline RationalExpr u(int i) { return RationalExpr(Symbol::u(i)); }
inline RationalExpr ux(int i) { return RationalExpr(Symbol::u(i, 1)); }

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    Rational small_rational()
    {
        int num = 0;
        while (num == 0) {
            num = uniform(-3, 3);
        }
        Rational r(num, uniform(1, 3));
        r.canonicalize();
        return r;
    }

    /// Random polynomial over the given symbols with at most `terms` terms
    /// and total degree ≤ `degree`.
    RationalExpr polynomial(const std::vector<Symbol>& vars, int terms, int degree)
    {
        RationalExpr e;
        for (int t = 0; t < terms; ++t) {
            RationalExpr m(small_rational());
            int d = uniform(0, degree);
            for (int k = 0; k < d; ++k) {
                m *= RationalExpr(vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))]);
            }
            e += m;
        }
        return e;
    }

    /// Random rational function: polynomial over polynomial (non-zero).
    RationalExpr rational(const std::vector<Symbol>& vars, int terms = 3, int degree = 2)
    {
        RationalExpr num = polynomial(vars, terms, degree);
        if (coin()) {
            return num;
        }
        RationalExpr den;
        while (den.is_zero()) {
            den = polynomial(vars, 2, 2);
        }
        return num / den;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline std::vector<Symbol> fields(int n)
{
    std::vector<Symbol> v;
    for (int i = 1; i <= n; ++i) {
        v.push_back(Symbol::u(i));
    }
    return v;
}

/// u_t = C(δH/δu) for H = ∫ h(u) dx: V^i_k = g^{ij}h_{,jk} + b^{ij}_k h_{,j}, W^i = ω^{ij}h_{,j}.
inline QuasilinearSystem system_from_density(const NonHomogeneousOperator& op, const RationalExpr& h)
{
    const int n = op.dim();
    QuasilinearSystem sys = QuasilinearSystem::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            RationalExpr v;
            for (int j = 0; j < n; ++j) {
                v += op.first.g(i, j) * partial(partial(h, j), k) + op.first.b(i, j, k) * partial(h, j);
            }
            sys.V(i, k) = v;
        }
        RationalExpr w;
        for (int j = 0; j < n; ++j) {
            w += op.zero.omega(i, j) * partial(h, j);
        }
        sys.W(i) = w;
    }
    return sys;
}

/// Fixed invertible linear maps, three per dimension.
inline std::vector<Diffeomorphism> linear_maps(int n)
{
    std::vector<Diffeomorphism> out;
    auto m = [n](std::vector<long> entries) {
        Tensor a = Tensor::endomorphism(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                a(i, j) = RationalExpr(entries[static_cast<std::size_t>(i * n + j)]);
            }
        }
        return Diffeomorphism::linear(a);
    };
    if (n == 2) {
        out.push_back(m({2, 0, 0, 2}));
        out.push_back(m({1, 1, 0, 1}));
        out.push_back(m({0, 1, 1, 3}));
    } else if (n == 3) {
        out.push_back(m({2, 0, 0, 0, 2, 0, 0, 0, 2}));
        out.push_back(m({1, 1, 0, 0, 1, 0, 0, 0, 1}));
        out.push_back(m({0, 1, 0, 1, 0, 2, 1, 1, 1}));
    }
    return out;
}

/// A polynomial coordinate change with polynomial inverse:
/// ū = (u1 + u2², u2 + u3², u3) in 3D, (u1 + u2², u2) in 2D.
inline Diffeomorphism triangular_map(int n)
{
    if (n == 2) {
        return Diffeomorphism({expr("u1 + u2^2", 2), expr("u2", 2)}, {expr("u1 - u2^2", 2), expr("u2", 2)});
    }
    return Diffeomorphism({expr("u1 + u2^2"), expr("u2 + u3^2"), expr("u3")},
                          {expr("u1 - (u2 - u3^2)^2"), expr("u2 - u3^2"), expr("u3")});
}

} // namespace hamcheck::testing
