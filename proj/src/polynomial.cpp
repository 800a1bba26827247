#include "hamcheck/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hamcheck {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Symbol s, std::uint32_t exp)
{
    Monomial m;
    if (exp > 0) {
        m.factors_.push_back({s.key(), exp});
        m.degree_ = exp;
    }
    return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const VarPower& f, std::uint32_t v) { return f.var < v; });
    return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

Monomial Monomial::without(std::uint32_t var) const
{
    Monomial m;
    m.factors_.reserve(factors_.size());
    for (const auto& f : factors_) {
        if (f.var != var) {
            m.factors_.push_back(f);
            m.degree_ += f.exp;
        }
    }
    return m;
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_) {
        return false;
    }
    for (const auto& f : factors_) {
        if (other.exponent(f.var) < f.exp) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    Monomial m;
    for (const auto& f : other.factors_) {
        std::uint32_t e = f.exp - exponent(f.var);
        if (e > 0) {
            m.factors_.push_back({f.var, e});
            m.degree_ += e;
        }
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->var < ib->var)) {
            m.factors_.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->var < ia->var) {
            m.factors_.push_back(*ib++);
        } else {
            m.factors_.push_back({ia->var, ia->exp + ib->exp});
            ++ia;
            ++ib;
        }
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (const auto& f : a.factors_) {
        std::uint32_t e = std::min(f.exp, b.exponent(f.var));
        if (e > 0) {
            m.factors_.push_back({f.var, e});
            m.degree_ += e;
        }
    }
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (a.degree_ != b.degree_) {
        return a.degree_ <=> b.degree_;
    }
    auto ia = a.factors_.rbegin();
    auto ib = b.factors_.rbegin();
    while (ia != a.factors_.rend() && ib != b.factors_.rend()) {
        if (ia->var != ib->var) {
            return ia->var <=> ib->var;
        }
        if (ia->exp != ib->exp) {
            return ia->exp <=> ib->exp;
        }
        ++ia;
        ++ib;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        out += Symbol::from_key(f.var).name();
        if (f.exp != 1) {
            out += '^';
            out += std::to_string(f.exp);
        }
    }
    return out.empty() ? "1" : out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long value)
{
    if (value != 0) {
        terms_.push_back({Monomial(), Rational(value)});
    }
}

Polynomial::Polynomial(const Rational& value)
{
    if (value != 0) {
        terms_.push_back({Monomial(), value});
    }
}

Polynomial::Polynomial(Symbol s) { terms_.push_back({Monomial::of(s), Rational(1)}); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c)
{
    Polynomial p;
    if (c != 0) {
        p.terms_.push_back({m, c});
    }
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coef == 0) {
                p.terms_.pop_back();
            }
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coef == 0) {
        p.terms_.pop_back();
    }
    return p;
}

Rational Polynomial::constant_value() const
{
    if (!is_constant()) {
        throw std::logic_error("polynomial is not constant");
    }
    return terms_.empty() ? Rational(0) : terms_.front().coef;
}

std::vector<std::uint32_t> Polynomial::variables() const
{
    std::vector<std::uint32_t> vars;
    for (const auto& t : terms_) {
        for (const auto& f : t.mono.factors()) {
            vars.push_back(f.var);
        }
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Polynomial::contains(std::uint32_t var) const
{
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono.exponent(var) > 0; });
}

std::uint32_t Polynomial::degree_in(std::uint32_t var) const
{
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.exponent(var));
    }
    return d;
}

Polynomial Polynomial::coefficient_in(std::uint32_t var, std::uint32_t k) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exponent(var) == k) {
            out.push_back({t.mono.without(var), t.coef});
        }
    }
    return from_terms(std::move(out));
}

std::map<std::uint32_t, Polynomial> Polynomial::coefficients_in(std::uint32_t var) const
{
    std::map<std::uint32_t, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
        buckets[t.mono.exponent(var)].push_back({t.mono.without(var), t.coef});
    }
    std::map<std::uint32_t, Polynomial> out;
    for (auto& [k, ts] : buckets) {
        out.emplace(k, from_terms(std::move(ts)));
    }
    return out;
}

Monomial Polynomial::monomial_content() const
{
    if (terms_.empty()) {
        return Monomial();
    }
    Monomial m = terms_.front().mono;
    for (const auto& t : terms_) {
        if (m.is_one()) {
            break;
        }
        m = gcd(m, t.mono);
    }
    return m;
}

Polynomial Polynomial::derivative(std::uint32_t var) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.exponent(var);
        if (e == 0) {
            continue;
        }
        Monomial m = t.mono.without(var);
        if (e > 1) {
            m = m * Monomial::of(Symbol::from_key(var), e - 1);
        }
        out.push_back({std::move(m), t.coef * e});
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(1L);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    if (c == 0) {
        return {};
    }
    Polynomial p = *this;
    for (auto& t : p.terms_) {
        t.coef *= c;
    }
    return p;
}

Polynomial Polynomial::times(const Monomial& m) const
{
    // Multiplying by a monomial preserves the term order.
    Polynomial p = *this;
    for (auto& t : p.terms_) {
        t.mono = t.mono * m;
    }
    return p;
}

Polynomial Polynomial::made_monic() const
{
    if (terms_.empty()) {
        return {};
    }
    Rational inv = 1 / terms_.front().coef;
    return scaled(inv);
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& d) const
{
    if (d.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (d.is_constant()) {
        return scaled(1 / d.constant_value());
    }
    std::vector<Term> quotient;
    Polynomial r = *this;
    const Term& ld = d.leading();
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!ld.mono.divides(lr.mono)) {
            return std::nullopt;
        }
        Term t{ld.mono.quotient_of(lr.mono), lr.coef / ld.coef};
        Polynomial step = d.times(t.mono).scaled(t.coef);
        quotient.push_back(std::move(t));
        r -= step;
    }
    return from_terms(std::move(quotient));
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->mono > ib->mono)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->mono > ia->mono) {
            out.push_back({ib->mono, subtract ? Rational(-ib->coef) : ib->coef});
            ++ib;
        } else {
            Rational c = subtract ? Rational(ia->coef - ib->coef) : Rational(ia->coef + ib->coef);
            if (c != 0) {
                out.push_back({ia->mono, c});
            }
            ++ia;
            ++ib;
        }
    }
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.is_monomial()) {
        return b.times(a.leading().mono).scaled(a.leading().coef);
    }
    if (b.is_monomial()) {
        return a.times(b.leading().mono).scaled(b.leading().coef);
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            out.push_back({ta.mono * tb.mono, ta.coef * tb.coef});
        }
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (terms_.size() != o.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coef;
        bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += c.get_str();
        } else if (c == 1) {
            out += t.mono.to_string();
        } else {
            out += c.get_str();
            out += '*';
            out += t.mono.to_string();
        }
    }
    return out;
}

// --------------------------------------------------------------------- gcd

namespace {

Polynomial divide_exactly(const Polynomial& a, const Polynomial& d)
{
    auto q = a.exact_divide(d);
    if (!q) {
        throw std::logic_error("internal error: inexact polynomial division in gcd");
    }
    return std::move(*q);
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b);

// Monic gcd of all coefficients of p viewed as a polynomial in var.
Polynomial content_in(const Polynomial& p, std::uint32_t var, Polynomial start = Polynomial())
{
    Polynomial g = std::move(start);
    for (const auto& [k, coef] : p.coefficients_in(var)) {
        g = gcd(g, coef);
        if (g.is_constant()) {
            return Polynomial(1L);
        }
    }
    return g;
}

// Pseudo-remainder of a by b in var, up to a var-free factor.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::uint32_t var)
{
    const std::uint32_t db = b.degree_in(var);
    const Polynomial lcb = b.coefficient_in(var, db);
    Polynomial r = a;
    while (!r.is_zero()) {
        std::uint32_t dr = r.degree_in(var);
        if (dr < db) {
            break;
        }
        Polynomial lcr = r.coefficient_in(var, dr);
        Polynomial shift = lcr.times(Monomial::of(Symbol::from_key(var), dr - db));
        r = lcb * r - shift * b;
    }
    return r;
}

Polynomial gcd_core(const Polynomial& a, const Polynomial& b)
{
    if (a.is_constant() || b.is_constant()) {
        return Polynomial(1L);
    }
    Polynomial am = a.made_monic();
    Polynomial bm = b.made_monic();
    if (am == bm) {
        return am;
    }
    const auto va = a.variables();
    const auto vb = b.variables();
    for (auto v : va) {
        if (!std::binary_search(vb.begin(), vb.end(), v)) {
            return content_in(a, v, bm);
        }
    }
    for (auto v : vb) {
        if (!std::binary_search(va.begin(), va.end(), v)) {
            return content_in(b, v, am);
        }
    }

    // Main variable: the one of smallest combined degree keeps the remainder
    // sequence short.
    std::uint32_t x = va.front();
    std::uint32_t best = ~0U;
    for (auto v : va) {
        std::uint32_t d = a.degree_in(v) + b.degree_in(v);
        if (d < best) {
            best = d;
            x = v;
        }
    }

    Polynomial ca = content_in(a, x);
    Polynomial cb = content_in(b, x);
    Polynomial pa = divide_exactly(a, ca);
    Polynomial pb = divide_exactly(b, cb);
    Polynomial c = gcd(ca, cb);
    if (pa.degree_in(x) < pb.degree_in(x)) {
        std::swap(pa, pb);
    }
    Polynomial g;
    for (;;) {
        Polynomial r = pseudo_remainder(pa, pb, x);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (r.degree_in(x) == 0) {
            g = Polynomial(1L);
            break;
        }
        pa = std::move(pb);
        pb = divide_exactly(r, content_in(r, x));
    }
    if (!g.is_constant()) {
        g = divide_exactly(g, content_in(g, x));
    }
    return (c * g).made_monic();
}

Polynomial strip_monomial(const Polynomial& p, const Monomial& m)
{
    if (m.is_one()) {
        return p;
    }
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        out.push_back({m.quotient_of(t.mono), t.coef});
    }
    return Polynomial::from_terms(std::move(out));
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero()) {
        return b.made_monic();
    }
    if (b.is_zero()) {
        return a.made_monic();
    }
    if (a.is_constant() || b.is_constant()) {
        return Polynomial(1L);
    }
    Monomial ma = a.monomial_content();
    Monomial mb = b.monomial_content();
    Monomial mg = gcd(ma, mb);
    Polynomial core = gcd_core(strip_monomial(a, ma), strip_monomial(b, mb));
    return core.times(mg).made_monic();
}

mpz_class coefficient_denominator_lcm(const Polynomial& p)
{
    mpz_class l = 1;
    for (const auto& t : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    return l;
}

mpz_class integer_content(const Polynomial& p)
{
    mpz_class g = 0;
    for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    }
    return g;
}

} // namespace hamcheck
