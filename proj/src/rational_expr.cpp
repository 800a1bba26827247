#include "hamcheck/rational_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamcheck {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& d)
{
    auto q = a.exact_divide(d);
    if (!q) {
        throw std::logic_error("internal error: gcd does not divide operand");
    }
    return std::move(*q);
}

} // namespace

RationalExpr::RationalExpr(long value) : num_(value) {}

RationalExpr::RationalExpr(const Rational& value) : num_(value) {}

RationalExpr::RationalExpr(Symbol s) : num_(s) {}

RationalExpr::RationalExpr(Polynomial p) : num_(std::move(p)) {}

RationalExpr RationalExpr::fraction(Polynomial num, Polynomial den)
{
    if (den.is_zero()) {
        throw std::domain_error("zero denominator");
    }
    RationalExpr r;
    if (num.is_zero()) {
        return r;
    }
    if (den.is_constant()) {
        r.num_ = num.scaled(1 / den.constant_value());
        return r;
    }
    if (!num.is_constant()) {
        Polynomial g = gcd(num, den);
        if (!g.is_constant()) {
            num = quotient(num, g);
            den = quotient(den, g);
        }
    }
    Rational lc = den.leading().coef;
    if (den.is_constant()) {
        r.num_ = num.scaled(1 / lc);
        return r;
    }
    r.num_ = num.scaled(1 / lc);
    r.den_ = den.scaled(1 / lc);
    return r;
}

RationalExpr canonicalize(const RationalExpr& e) { return RationalExpr::fraction(e.numerator(), e.denominator()); }

std::pair<Polynomial, Polynomial> RationalExpr::integer_form() const
{
    mpz_class l = coefficient_denominator_lcm(num_);
    mpz_class ld = coefficient_denominator_lcm(den_);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
    Polynomial n = num_.scaled(Rational(l));
    Polynomial d = den_.scaled(Rational(l));
    mpz_class g = integer_content(n);
    mpz_class gd = integer_content(d);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
    if (g != 0 && g != 1) {
        n = n.scaled(Rational(1, 1) / Rational(g));
        d = d.scaled(Rational(1, 1) / Rational(g));
    }
    return {std::move(n), std::move(d)};
}

std::vector<Symbol> RationalExpr::symbols() const
{
    auto vars = num_.variables();
    auto dv = den_.variables();
    vars.insert(vars.end(), dv.begin(), dv.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<Symbol> out;
    out.reserve(vars.size());
    for (auto v : vars) {
        out.push_back(Symbol::from_key(v));
    }
    return out;
}

bool RationalExpr::depends_on(Symbol s) const { return num_.contains(s.key()) || den_.contains(s.key()); }

RationalExpr RationalExpr::diff(Symbol s) const
{
    const auto v = s.key();
    if (den_.is_constant()) {
        RationalExpr r;
        r.num_ = num_.derivative(v);
        return r;
    }
    Polynomial dn = num_.derivative(v);
    Polynomial dd = den_.derivative(v);
    if (dd.is_zero()) {
        return fraction(std::move(dn), den_);
    }
    return fraction(dn * den_ - num_ * dd, den_ * den_);
}

RationalExpr RationalExpr::pow(int exponent) const
{
    if (exponent < 0) {
        if (is_zero()) {
            throw std::domain_error("zero raised to a negative power");
        }
        RationalExpr r;
        r.num_ = den_.pow(static_cast<unsigned>(-exponent));
        r.den_ = num_.pow(static_cast<unsigned>(-exponent));
        // Coprimality is preserved by powers; only the leading coefficient
        // needs normalizing.
        return fraction(std::move(r.num_), std::move(r.den_));
    }
    RationalExpr r;
    r.num_ = num_.pow(static_cast<unsigned>(exponent));
    r.den_ = den_.pow(static_cast<unsigned>(exponent));
    return r;
}

namespace {

RationalExpr evaluate(const Polynomial& p, const std::map<Symbol, RationalExpr>& bindings)
{
    RationalExpr total;
    std::map<std::pair<std::uint32_t, std::uint32_t>, RationalExpr> powers;
    for (const auto& t : p.terms()) {
        RationalExpr term(t.coef);
        for (const auto& f : t.mono.factors()) {
            Symbol s = Symbol::from_key(f.var);
            auto it = bindings.find(s);
            if (it == bindings.end()) {
                term *= RationalExpr(Polynomial::monomial(Monomial::of(s, f.exp)));
                continue;
            }
            auto key = std::make_pair(f.var, f.exp);
            auto pw = powers.find(key);
            if (pw == powers.end()) {
                pw = powers.emplace(key, it->second.pow(static_cast<int>(f.exp))).first;
            }
            term *= pw->second;
        }
        total += term;
    }
    return total;
}

} // namespace

RationalExpr RationalExpr::substitute(const std::map<Symbol, RationalExpr>& bindings) const
{
    RationalExpr n = evaluate(num_, bindings);
    RationalExpr d = evaluate(den_, bindings);
    if (d.is_zero()) {
        throw std::domain_error("substitution makes a denominator identically zero");
    }
    return n / d;
}

RationalExpr& RationalExpr::operator+=(const RationalExpr& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_ == o.den_) {
        Polynomial n = num_ + o.num_;
        if (den_.is_constant()) {
            num_ = std::move(n);
            return *this;
        }
        return *this = fraction(std::move(n), den_);
    }
    if (o.den_.is_constant()) {
        return *this = fraction(num_ + o.num_ * den_, den_);
    }
    if (den_.is_constant()) {
        return *this = fraction(num_ * o.den_ + o.num_, o.den_);
    }
    Polynomial g = gcd(den_, o.den_);
    Polynomial d1 = quotient(den_, g);
    Polynomial d2 = quotient(o.den_, g);
    return *this = fraction(num_ * d2 + o.num_ * d1, den_ * d2);
}

RationalExpr& RationalExpr::operator-=(const RationalExpr& o) { return *this += -o; }

RationalExpr operator-(const RationalExpr& a)
{
    RationalExpr r = a;
    r.num_ = -a.num_;
    return r;
}

RationalExpr& RationalExpr::operator*=(const RationalExpr& o)
{
    if (is_zero() || o.is_zero()) {
        return *this = RationalExpr();
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_;
        return *this;
    }
    // Cross-cancel so that only small gcds are ever needed.
    Polynomial g1 = o.den_.is_constant() ? Polynomial(1L) : gcd(num_, o.den_);
    Polynomial g2 = den_.is_constant() ? Polynomial(1L) : gcd(o.num_, den_);
    Polynomial n = quotient(num_, g1) * quotient(o.num_, g2);
    Polynomial d = quotient(den_, g2) * quotient(o.den_, g1);
    Rational lc = d.leading().coef;
    num_ = n.scaled(1 / lc);
    den_ = d.scaled(1 / lc);
    return *this;
}

RationalExpr& RationalExpr::operator/=(const RationalExpr& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero expression");
    }
    RationalExpr inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    Rational lc = inv.den_.leading().coef;
    inv.num_ = inv.num_.scaled(1 / lc);
    inv.den_ = inv.den_.scaled(1 / lc);
    return *this *= inv;
}

std::string RationalExpr::to_string() const
{
    if (den_.is_constant()) {
        return num_.to_string();
    }
    auto [n, d] = integer_form();
    std::string ns = n.to_string();
    if (n.terms().size() > 1) {
        ns = "(" + ns + ")";
    }
    std::string ds = d.to_string();
    const bool bare_den = d.is_monomial() && d.leading().coef == 1 && d.leading().mono.factors().size() == 1;
    if (!bare_den) {
        ds = "(" + ds + ")";
    }
    return ns + "/" + ds;
}

} // namespace hamcheck
