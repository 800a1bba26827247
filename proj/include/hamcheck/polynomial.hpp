#pragma once

#include "hamcheck/symbol.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamcheck {

using Rational = mpq_class;

struct VarPower {
    std::uint32_t var; // Symbol key
    std::uint32_t exp;

    bool operator==(const VarPower&) const = default;
};

/// A power product of symbols, factors sorted by ascending symbol key.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(Symbol s, std::uint32_t exp = 1);

    const std::vector<VarPower>& factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }

    std::uint32_t exponent(std::uint32_t var) const;
    Monomial without(std::uint32_t var) const;
    bool divides(const Monomial& other) const;
    /// Requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    /// Graded lexicographic order: total degree first, ties broken on the
    /// exponent of the largest symbol key.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::string to_string() const;

private:
    std::vector<VarPower> factors_;
    std::uint32_t degree_ = 0;
};

struct Term {
    Monomial mono;
    Rational coef;
};

/// Sparse multivariate polynomial over ℚ. Terms are kept in strictly
/// decreasing graded-lexicographic order with no zero coefficients, so
/// structural equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long value); // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& value); // NOLINT(google-explicit-constructor)
    explicit Polynomial(Symbol s);
    static Polynomial from_terms(std::vector<Term> terms);
    static Polynomial monomial(const Monomial& m, const Rational& c = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_value() const; // requires is_constant()
    const Term& leading() const { return terms_.front(); }
    std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

    /// Symbol keys appearing with nonzero exponent, ascending.
    std::vector<std::uint32_t> variables() const;
    bool contains(std::uint32_t var) const;
    std::uint32_t degree_in(std::uint32_t var) const;
    /// Coefficient of var^k, as a polynomial free of var.
    Polynomial coefficient_in(std::uint32_t var, std::uint32_t k) const;
    /// All coefficients in var, keyed by exponent.
    std::map<std::uint32_t, Polynomial> coefficients_in(std::uint32_t var) const;
    /// Minimum exponent of every variable across all terms.
    Monomial monomial_content() const;

    Polynomial derivative(std::uint32_t var) const;
    Polynomial pow(unsigned exponent) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times(const Monomial& m) const;
    Polynomial made_monic() const;

    /// Exact quotient a / d, or nullopt when d does not divide a.
    std::optional<Polynomial> exact_divide(const Polynomial& d) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

    bool operator==(const Polynomial& o) const;

    /// Printed with rational coefficients in the expression grammar.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Monic greatest common divisor over ℚ (zero only when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Least common multiple of the coefficient denominators.
mpz_class coefficient_denominator_lcm(const Polynomial& p);
/// Gcd of the numerators of all coefficients (coefficients assumed integral).
mpz_class integer_content(const Polynomial& p);

} // namespace hamcheck
