#pragma once

#include "hamcheck/polynomial.hpp"
#include "hamcheck/symbol.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hamcheck {

/// Exact rational function over ℚ in jet symbols and parameters.
///
/// Canonical form: numerator and denominator coprime, denominator monic
/// under graded-lex order (so a constant denominator is exactly 1). Two
/// expressions are equal iff their canonical parts are identical, and
/// is_zero() is decided by the numerator alone. Values are immutable once
/// built and safe to share across threads.
class RationalExpr {
public:
    RationalExpr() = default;
    RationalExpr(long value); // NOLINT(google-explicit-constructor)
    RationalExpr(const Rational& value); // NOLINT(google-explicit-constructor)
    RationalExpr(Symbol s); // NOLINT(google-explicit-constructor)
    explicit RationalExpr(Polynomial p);
    /// Canonicalizes num/den. Throws std::domain_error if den is zero.
    static RationalExpr fraction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value(); }

    /// Numerator and denominator scaled to coprime integer coefficients with
    /// a positive leading denominator coefficient, e.g. (u1^4 - 1, 2*u1^2).
    std::pair<Polynomial, Polynomial> integer_form() const;

    /// Symbols appearing in numerator or denominator, ascending.
    std::vector<Symbol> symbols() const;
    bool depends_on(Symbol s) const;

    RationalExpr diff(Symbol s) const;
    RationalExpr pow(int exponent) const;
    /// Simultaneous substitution. Throws std::domain_error when the image of
    /// the denominator is identically zero.
    RationalExpr substitute(const std::map<Symbol, RationalExpr>& bindings) const;

    RationalExpr& operator+=(const RationalExpr& o);
    RationalExpr& operator-=(const RationalExpr& o);
    RationalExpr& operator*=(const RationalExpr& o);
    RationalExpr& operator/=(const RationalExpr& o);
    friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) { return a += b; }
    friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) { return a -= b; }
    friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) { return a *= b; }
    friend RationalExpr operator/(RationalExpr a, const RationalExpr& b) { return a /= b; }
    friend RationalExpr operator-(const RationalExpr& a);

    bool operator==(const RationalExpr& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Printed in the input grammar; parse(to_string()) reproduces the value.
    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_{1L};
};

/// Re-runs canonicalization on an already canonical value (idempotence probe).
RationalExpr canonicalize(const RationalExpr& e);

} // namespace hamcheck
