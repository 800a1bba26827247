#include "doctest.h"

#include "support.hpp"

#include "hamcheck/covering.hpp"
#include "hamcheck/jet.hpp"

using namespace hamcheck;
using namespace hamcheck::testing;

namespace {

RationalExpr J(int i, int order) { return RationalExpr(Symbol::u(i, order)); }
RationalExpr Pj(int i, int order = 0) { return RationalExpr(Symbol::p(i, order)); }

} // namespace

TEST_CASE("total x-derivative")
{
    RationalExpr e = u(1) * u(2);
    CHECK(total_x(e) == J(1, 1) * u(2) + u(1) * J(2, 1));
    CHECK(total_x(RationalExpr(Symbol::parameter("a")) * u(1)) == RationalExpr(Symbol::parameter("a")) * J(1, 1));
    CHECK(total_x(J(3, 2)) == J(3, 3));
    CHECK(total_x(Pj(2, 1)) == Pj(2, 2));
    CHECK(total_x(RationalExpr(Symbol::q(1))) == RationalExpr(Symbol::q(1, 1)));
    CHECK(total_x(u(1).pow(3), 2) == RationalExpr(6L) * u(1) * J(1, 1).pow(2) + RationalExpr(3L) * u(1).pow(2) * J(1, 2));
    // quotient rule
    CHECK(total_x(RationalExpr(1L) / u(1)) == -J(1, 1) / u(1).pow(2));
}

TEST_CASE("on-shell time derivative for the KdV system")
{
    ProblemInstance p = builtin("kdv2");
    Evolution ev(p.system);
    CHECK(ev.total_t(u(3)) == -J(1, 1) + RationalExpr(6L) * u(1) * u(2));
    CHECK(ev.total_t(u(1)) == u(2));
    CHECK(ev.of(Symbol::u(1, 1)) == J(2, 1));
    CHECK(ev.of(Symbol::u(2, 2)) == J(3, 2));
    CHECK(ev.total_t(u(1) * u(2)) == u(2) * u(2) + u(1) * u(3));
    CHECK_THROWS_AS(ev.of(Symbol::p(1)), Error);
}

TEST_CASE("cotangent covering of the two-wave system")
{
    ProblemInstance p = builtin("twowave");
    Evolution ev(cotangent_covering(p.system));
    RationalExpr a(Symbol::parameter("a"));
    // p1_t = -(a u2 p1 + 2 u1 p2), p2_t = -a u1 p1 + a p2_x, worked by hand
    CHECK(ev.of(Symbol::p(1)) == -(a * u(2) * Pj(1) + RationalExpr(2L) * u(1) * Pj(2)));
    CHECK(ev.of(Symbol::p(2)) == -a * u(1) * Pj(1) + a * Pj(2, 1));
    CHECK(ev.total_t(Pj(1, 1))
          == -(a * J(2, 1) * Pj(1) + a * u(2) * Pj(1, 1) + RationalExpr(2L) * J(1, 1) * Pj(2)
               + RationalExpr(2L) * u(1) * Pj(2, 1)));
}

TEST_CASE("D_x and D_t commute")
{
    Gen gen(5);
    for (const auto& name : builtin_names()) {
        ProblemInstance p = builtin(name);
        Evolution ev(cotangent_covering(p.system));
        std::vector<Symbol> vars;
        for (int i = 1; i <= p.system.n; ++i) {
            vars.push_back(Symbol::u(i));
            vars.push_back(Symbol::u(i, 1));
            vars.push_back(Symbol::p(i, 1));
        }
        for (int k = 0; k < 5; ++k) {
            RationalExpr e = gen.rational(vars);
            CHECK(total_x(ev.total_t(e)) == ev.total_t(total_x(e)));
        }
    }
}

TEST_CASE("collect by jet family")
{
    RationalExpr e = RationalExpr(3L) * u(1) * Pj(1, 1) + J(1, 1) * Pj(2) + u(2) * Pj(2);
    auto by_p = collect(e, kCovectors);
    REQUIRE(by_p.size() == 2);
    CHECK(by_p.at(Monomial::of(Symbol::p(1, 1))) == RationalExpr(3L) * u(1));
    CHECK(by_p.at(Monomial::of(Symbol::p(2))) == J(1, 1) + u(2));

    auto by_both = collect(e, kCovectors | kUJets);
    REQUIRE(by_both.size() == 3);
    CHECK(by_both.at(Monomial::of(Symbol::u(1, 1)) * Monomial::of(Symbol::p(2))) == RationalExpr(1L));
    CHECK(by_both.at(Monomial::of(Symbol::p(2))) == u(2));

    CHECK(collect(RationalExpr(), kCovectors).empty());
    CHECK_THROWS_AS(collect(u(1) / Pj(1), kCovectors), Error);
    CHECK(collect(Pj(1) / u(1), kCovectors).at(Monomial::of(Symbol::p(1))) == RationalExpr(1L) / u(1));
}

TEST_CASE("jet order")
{
    CHECK(max_jet_order(u(1)) == 0);
    CHECK(max_jet_order(J(2, 3) * u(1) + J(1, 1)) == 3);
    CHECK(max_jet_order(Pj(1, 2)) == 2);
    CHECK(in_family(Symbol::u(1, 1), kUJets));
    CHECK_FALSE(in_family(Symbol::u(1), kUJets));
    CHECK(in_family(Symbol::p(1), kCovectors));
    CHECK_FALSE(in_family(Symbol::q(1), kCovectors));
}
