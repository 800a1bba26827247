#include "doctest.h"

#include "hamcheck/parser.hpp"
#include "hamcheck/tensor.hpp"

using namespace hamcheck;

namespace {

ParseContext ctx(int n, std::vector<std::string> params = {})
{
    ParseContext c;
    c.dimension = n;
    c.parameters = std::move(params);
    return c;
}

RationalExpr P(const std::string& s, int n = 3) { return parse_expr(s, ctx(n, {"a", "c"})); }

Rational at(const RationalExpr& e, std::map<Symbol, RationalExpr> b)
{
    RationalExpr v = e.substitute(b);
    REQUIRE(v.is_constant());
    return v.constant_value();
}

} // namespace

TEST_CASE("parse simple polynomial")
{
    RationalExpr e = P("6*u1*u2");
    CHECK(e.is_polynomial());
    CHECK(e.to_string() == "6*u1*u2");
    CHECK(e == RationalExpr(6L) * Symbol::u(1) * Symbol::u(2));
    CHECK(P("0").is_zero());
}

TEST_CASE("parse reduces to lowest terms")
{
    RationalExpr e = P("(u1^2 - 1/u1^2)/2");
    auto [n, d] = e.integer_form();
    RationalExpr u1(Symbol::u(1));
    CHECK(RationalExpr(n) == u1.pow(4) - RationalExpr(1L));
    CHECK(RationalExpr(d) == RationalExpr(2L) * u1.pow(2));
    CHECK(at(e, {{Symbol::u(1), RationalExpr(2L)}}) == Rational(15, 8));
    CHECK(e.to_string() == "(u1^4 - 1)/(2*u1^2)");
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(P("2u1"), ParseError);
    try {
        P("2u1");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(P("u4"), ParseError);
    CHECK_THROWS_AS(P("u0"), ParseError);
    CHECK_THROWS_AS(P("x"), ParseError);
    CHECK_THROWS_AS(P("sin(u1)"), ParseError);
    CHECK_THROWS_AS(P("u1/0"), ParseError);
    CHECK_THROWS_AS(P("p1"), ParseError);
    CHECK_THROWS_AS(P("(u1"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("u1^u2"), ParseError);
    CHECK_THROWS_AS(P("u1/(u2-u2)"), ParseError);
}

TEST_CASE("unary minus binds looser than power")
{
    CHECK(P("-u1^2") == -(RationalExpr(Symbol::u(1)).pow(2)));
    CHECK(P("2^-1") == RationalExpr(Rational(1, 2)));
    CHECK(P("--u1") == RationalExpr(Symbol::u(1)));
}

TEST_CASE("parameters are independent constants")
{
    RationalExpr e = P("a*u1 + c");
    CHECK(e.diff(Symbol::parameter("c")) == RationalExpr(1L));
    CHECK(P("c").diff(Symbol::u(1)).is_zero());
}

TEST_CASE("partial derivatives")
{
    CHECK(P("8*u1").diff(Symbol::u(1)) == RationalExpr(8L));
    RationalExpr e = P("(u1^4-1)/(2*u1^2)");
    RationalExpr d = e.diff(Symbol::u(1));
    CHECK(d == P("(u1^4+1)/u1^3"));
    CHECK(at(d, {{Symbol::u(1), RationalExpr(2L)}}) == Rational(17, 8));
}

TEST_CASE("substitution")
{
    CHECK(P("u1*u2").substitute({{Symbol::u(1), Symbol::u(2)}}) == P("u2^2"));
    CHECK(P("1/u1").substitute({{Symbol::u(1), P("u1+1")}}) == P("1/(u1+1)"));
    // simultaneous, not sequential
    CHECK(P("u1-u2").substitute({{Symbol::u(1), Symbol::u(2)}, {Symbol::u(2), Symbol::u(1)}}) == P("u2-u1"));
    CHECK_THROWS_AS(P("1/u1").substitute({{Symbol::u(1), P("u2-u2+u1-u1")}}), std::domain_error);
}

TEST_CASE("gcd cancellation")
{
    RationalExpr e = P("(u1^2-u2^2)/(u1+u2)");
    CHECK(e == P("u1-u2"));
    RationalExpr f = P("(u1*u2+u1)/(u2^2-1)");
    CHECK(f == P("u1/(u2-1)"));
    CHECK(P("1/(u1+u2) - 1/(u1+u2)").is_zero());
    CHECK(P("(a*u1 - a*u2)/(c*u1-c*u2)") == P("a/c"));
}

TEST_CASE("canonical denominator is monic")
{
    RationalExpr e = P("1/(-2*u1+4)");
    CHECK(e.denominator().leading().coef == 1);
    CHECK(canonicalize(e) == e);
    CHECK(P(e.to_string()) == e);
}

TEST_CASE("determinant and inverse")
{
    auto g = Tensor::from_rows({{P("0"), P("0"), P("1")}, {P("0"), P("-1"), P("0")}, {P("1"), P("0"), P("8*u1")}},
                               {Slot::Upper, Slot::Upper});
    CHECK(det(g) == RationalExpr(1L));
    auto gi = inverse(g);
    REQUIRE(gi);
    CHECK((*gi)(0, 0) == P("-8*u1"));
    CHECK((*gi)(0, 2) == RationalExpr(1L));
    CHECK((*gi)(2, 2).is_zero());
    CHECK(gi->slots()[0] == Slot::Lower);
    auto prod = matmul(g, *gi);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(prod(i, j) == RationalExpr(i == j ? 1L : 0L));
        }
    }

    auto deg = Tensor::from_rows({{P("0"), P("0"), P("0")}, {P("0"), P("0"), P("0")}, {P("0"), P("0"), P("-1")}},
                                 {Slot::Upper, Slot::Upper});
    CHECK(det(deg).is_zero());
    CHECK_FALSE(inverse(deg).has_value());

    auto id = Tensor::identity(4);
    CHECK(*inverse(id) == Tensor::identity(4));
}
