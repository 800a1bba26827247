#include "doctest.h"

#include "support.hpp"

#include "hamcheck/compat.hpp"
#include "hamcheck/covering.hpp"

using namespace hamcheck;
using namespace hamcheck::testing;

namespace {

JetVector jets(int n, SymbolKind kind, int order = 0)
{
    JetVector v;
    for (int i = 1; i <= n; ++i) {
        v.emplace_back(kind == SymbolKind::Covector ? Symbol::p(i, order)
                       : kind == SymbolKind::Vector ? Symbol::q(i, order)
                                                    : Symbol::u(i, order));
    }
    return v;
}

Tensor transposed2(const Tensor& t)
{
    return Tensor::generate(t.dim(), {t.slots()[1], t.slots()[0]}, [&](std::span<const int> i) { return t(i[1], i[0]); });
}

// Entrywise equality, ignoring declared slot variance.
bool same_entries(const Tensor& a, const Tensor& b) { return a.rank() == b.rank() && a.data() == b.data(); }

// A non-compatible pair in curvilinear coordinates: every oracle class is populated.
std::pair<QuasilinearSystem, NonHomogeneousOperator> generic_pair(unsigned seed, const char* base)
{
    Gen gen(seed);
    ProblemInstance p = builtin(base);
    NonHomogeneousOperator op = transform(p.op, triangular_map(p.op.dim()));
    QuasilinearSystem s = QuasilinearSystem::zero(p.system.n);
    for (auto& v : s.V.data()) {
        v = gen.polynomial(fields(s.n), 2, 2);
    }
    for (auto& v : s.W.data()) {
        v = gen.polynomial(fields(s.n), 2, 2);
    }
    return {s, op};
}

} // namespace

TEST_CASE("translations and the flow are symmetries")
{
    for (const auto& name : builtin_names()) {
        ProblemInstance p = builtin(name);
        const int n = p.system.n;
        Linearization l(p.system);
        for (const auto& c : l.apply(jets(n, SymbolKind::Field, 1))) {
            CHECK(c.is_zero());
        }
        JetVector flow;
        for (int i = 0; i < n; ++i) {
            RationalExpr f = p.system.W(i);
            for (int j = 0; j < n; ++j) {
                f += p.system.V(i, j) * RationalExpr(Symbol::u(j + 1, 1));
            }
            flow.push_back(f);
        }
        for (const auto& c : l.apply(flow)) {
            CHECK(c.is_zero());
        }
    }
}

TEST_CASE("adjoint identity")
{
    Gen gen(11);
    for (const auto& name : builtin_names()) {
        ProblemInstance p = builtin(name);
        const int n = p.system.n;
        Evolution ev(p.system);
        std::vector<Symbol> vars;
        for (int i = 1; i <= n; ++i) {
            vars.push_back(Symbol::u(i));
            vars.push_back(Symbol::u(i, 1));
        }
        JetVector phi;
        JetVector psi;
        for (int i = 0; i < n; ++i) {
            phi.push_back(gen.polynomial(vars, 2, 2));
            psi.push_back(gen.polynomial(vars, 2, 2));
        }
        JetVector lphi = Linearization(p.system).apply(phi, ev);
        JetVector lpsi = AdjointLinearization(p.system).apply(psi, ev);
        RationalExpr lhs;
        RationalExpr dot;
        RationalExpr flux;
        for (int i = 0; i < n; ++i) {
            lhs += psi[i] * lphi[i] - lpsi[i] * phi[i];
            dot += psi[i] * phi[i];
            for (int k = 0; k < n; ++k) {
                flux += psi[k] * p.system.V(k, i) * phi[i];
            }
        }
        CHECK_MESSAGE(lhs == ev.total_t(dot) - total_x(flux), name);
    }
}

TEST_CASE("cotangent and tangent coverings")
{
    for (const auto& name : builtin_names()) {
        ProblemInstance p = builtin(name);
        const int n = p.system.n;
        CoveringSystem cot = cotangent_covering(p.system);
        CHECK(cot.family == SymbolKind::Covector);
        CHECK(cot.evolution == AdjointLinearization(p.system).spatial_part(jets(n, SymbolKind::Covector)));
        for (const auto& c : AdjointLinearization(p.system).apply(jets(n, SymbolKind::Covector), Evolution(cot))) {
            CHECK(c.is_zero());
        }
        CoveringSystem tan = tangent_covering(p.system);
        CHECK(tan.family == SymbolKind::Vector);
        for (const auto& c : Linearization(p.system).apply(jets(n, SymbolKind::Vector), Evolution(tan))) {
            CHECK(c.is_zero());
        }
    }
    CoveringSystem kdv = cotangent_covering(builtin("kdv2").system);
    auto coeffs = collect(kdv.evolution[0], kCovectors);
    CHECK(coeffs.at(Monomial::of(Symbol::p(3))) == expr("-6*u2"));
    CHECK(coeffs.at(Monomial::of(Symbol::p(3, 1))) == RationalExpr(-1L));
}

TEST_CASE("operator applied to covectors")
{
    JetVector a = operator_on_covectors(builtin("kdv1").op);
    RationalExpr p2(Symbol::p(2));
    RationalExpr p3(Symbol::p(3));
    CHECK(a[0] == RationalExpr(Symbol::p(3, 1)) + expr("2*u1") * p2 + expr("2*u2") * p3);
    CHECK(a[2] == RationalExpr(Symbol::p(1, 1)) + expr("8*u1") * RationalExpr(Symbol::p(3, 1))
                      + RationalExpr(4L) * RationalExpr(Symbol::u(1, 1)) * p3 + expr("-2*u2") * RationalExpr(Symbol::p(1))
                      + expr("12*u1^2 - 2*u3") * p2);
}

TEST_CASE("oracle classes match the condition residuals")
{
    for (const char* base : {"threewave", "kdv2"}) {
        for (unsigned seed : {1u, 2u}) {
            auto [s, op] = generic_pair(seed, base);
            OracleResidual o = oracle(s, op);
            CHECK_FALSE(o.pass());
            std::vector<std::string> names;
            for (const auto& [n, t] : o.classes) {
                names.push_back(n);
            }
            CHECK(names == std::vector<std::string>{"p_xx", "p_x*u_x", "p*u_xx", "p*u_x*u_x", "p_x", "p*u_x", "p"});

            auto c = check_nonhom_compat(s, op, ConditionForm::Corrected);
            CHECK(same_entries(o.at("p_xx"), transposed2(c.at("thmcomp.1").residual)));
            CHECK(same_entries(o.at("p*u_xx"), c.at("thmcomp.2").residual));
            CHECK(same_entries(o.at("p_x"), c.at("thmcomp.3").residual));
            CHECK(same_entries(o.at("p"), transposed2(c.at("thmcomp.4").residual)));
            CHECK(same_entries(o.at("p*u_x"), t_tensor(s, op)));
            CHECK(same_entries(o.at("p*u_x"), c.at("thmcomp.5").residual));
            CHECK_FALSE(o.at("p*u_x").is_zero());

            NonHomogeneousOperator first = op;
            first.zero.omega = Tensor::bivector(op.dim());
            QuasilinearSystem hom = s;
            hom.W = Tensor::vector(s.n);
            OracleResidual oh = oracle(hom, first);
            CHECK(same_entries(oh.at("p_x*u_x"), homogeneous_mixed_tensor(hom, first.first)));
            CHECK(same_entries(oh.at("p*u_x*u_x").scaled(RationalExpr(2L)), homogeneous_quadratic_tensor(hom, first.first)));
        }
    }
    CHECK_THROWS_AS(oracle(builtin("kdv1").system, builtin("kdv1").op).at("p_xxx"), std::out_of_range);
}

TEST_CASE("oracle on the corpus")
{
    for (const char* name : {"kdv1", "kdv2", "sinhgordon", "threewave", "twowave-corrected"}) {
        ProblemInstance p = builtin(name);
        OracleResidual o = oracle(p.system, p.op);
        CHECK_MESSAGE(o.pass(), name);
        for (const auto& e : o.expansion) {
            CHECK(e.is_zero());
        }
    }
    ProblemInstance t = builtin("twowave");
    OracleResidual o = oracle(t.system, t.op);
    ParseContext c{2, {"a"}, false};
    CHECK(o.at("p_x")(0, 1) == parse_expr("-2*a*u1", c));
    CHECK(o.at("p*u_x")(1, 0, 0) == parse_expr("-2*a", c));
}
