#include "doctest.h"

#include "support.hpp"

#include "hamcheck/compat.hpp"
#include "hamcheck/covering.hpp"

using namespace hamcheck;
using namespace hamcheck::testing;

namespace {

UltralocalOperator canonical2()
{
    Tensor w = Tensor::bivector(2);
    w(0, 1) = RationalExpr(1L);
    w(1, 0) = RationalExpr(-1L);
    return {w};
}

QuasilinearSystem zero_order(const std::vector<std::string>& w)
{
    QuasilinearSystem s = QuasilinearSystem::zero(static_cast<int>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        s.W(static_cast<int>(i)) = expr(w[i], static_cast<int>(w.size()));
    }
    return s;
}

QuasilinearSystem homogeneous_part(const ProblemInstance& p)
{
    QuasilinearSystem s = QuasilinearSystem::zero(p.system.n);
    s.V = p.system.V;
    return s;
}

} // namespace

TEST_CASE("zero-order systems")
{
    // Hamiltonian vector field of h = u1^2 u2 for the canonical bracket
    QuasilinearSystem ham = zero_order({"u1^2", "-2*u1*u2"});
    auto r = check_0order(ham, canonical2(), ConditionForm::Corrected);
    CHECK(r.at("0order.direct").pass());
    CHECK(r.at("0order.covariant").pass());
    CHECK(r.at("0order.covariant").notes.empty());
    // the printed form rejects it
    auto printed = check_0order(ham, canonical2(), ConditionForm::Verbatim);
    CHECK_FALSE(printed.at("0order.direct").pass());
    CHECK(printed.at("0order.direct").residual(0, 1) == expr("4*u1", 2));
    CHECK(printed.at("0order.covariant").pass());
    CHECK_FALSE(printed.at("0order.covariant").notes.empty());

    // u_t = u does not preserve a constant symplectic form
    QuasilinearSystem scaling = zero_order({"u1", "u2"});
    auto corrected = check_0order(scaling, canonical2(), ConditionForm::Corrected);
    CHECK_FALSE(corrected.at("0order.direct").pass());
    CHECK(corrected.at("0order.direct").residual(0, 1) == RationalExpr(-2L));
    CHECK_FALSE(corrected.at("0order.covariant").pass());
    // the printed form misses it
    CHECK(check_0order(scaling, canonical2(), ConditionForm::Verbatim).at("0order.direct").pass());
    NonHomogeneousOperator op = NonHomogeneousOperator::null(2);
    op.zero = canonical2();
    CHECK_FALSE(oracle(scaling, op).pass());

    CHECK_THROWS_AS(check_0order(builtin("twowave").system, canonical2()), PreconditionViolation);
    // degenerate ω: no covariant report
    auto k = check_0order(zero_order({"u2", "u3", "u1"}), builtin("kdv2").op.zero);
    CHECK(k.find("0order.covariant") == nullptr);
}

TEST_CASE("homogeneous systems")
{
    ProblemInstance p = builtin("threewave");
    QuasilinearSystem s = homogeneous_part(p);
    auto r = check_homogeneous(s, p.op.first);
    CHECK(r.all_pass());
    CHECK(r.operator_hamiltonian);
    CHECK(check_tsarev(s, p.op.first.g).all_pass());
    CHECK(homogeneous_mixed_tensor(s, p.op.first).is_zero());
    CHECK(homogeneous_quadratic_tensor(s, p.op.first).is_zero());

    s.V(0, 1) = RationalExpr(1L);
    auto bad = check_homogeneous(s, p.op.first);
    CHECK_FALSE(bad.at("thm8.1").pass());
    CHECK_FALSE(check_tsarev(s, p.op.first.g).at("tsarev.1").pass());

    CHECK_THROWS_AS(check_homogeneous(p.system, p.op.first), PreconditionViolation);
    CHECK_THROWS_AS(check_tsarev(p.system, p.op.first.g), PreconditionViolation);
    CHECK_THROWS_AS(check_tsarev(homogeneous_part(builtin("kdv2")), builtin("kdv2").op.first.g), Degenerate);
}

TEST_CASE("homogeneous check flags a non-Hamiltonian operator")
{
    ProblemInstance p = builtin("threewave");
    FirstOrderOperator op = p.op.first;
    op.g(0, 1) = RationalExpr(1L);
    auto r = check_homogeneous(homogeneous_part(p), op);
    CHECK_FALSE(r.operator_hamiltonian);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("Tsarev conditions on a curved metric carry a note")
{
    Tensor g = Tensor::bivector(2);
    g(0, 0) = expr("u2^2", 2);
    g(1, 1) = expr("u2^2", 2);
    auto r = check_tsarev(QuasilinearSystem::zero(2), g);
    CHECK(r.all_pass());
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("non-homogeneous compatibility: corpus")
{
    for (auto form : {ConditionForm::Verbatim, ConditionForm::Corrected}) {
        for (const char* name : {"kdv1", "kdv2", "sinhgordon", "threewave", "twowave-corrected"}) {
            ProblemInstance p = builtin(name);
            CHECK_MESSAGE(check_nonhom_compat(p.system, p.op, form).all_pass(), name);
            CHECK_MESSAGE(check_compat(p.system, p.op, form).all_pass(), name);
        }
    }
    for (const char* name : {"kdv1", "threewave"}) {
        ProblemInstance p = builtin(name);
        auto r = check_nonhom_compat_nondeg(p.system, p.op, ConditionForm::Corrected);
        CHECK(r.all_pass());
        CHECK(r.reports.size() == 5);
        // odd dimension: ω is degenerate and cor2.4 falls back
        CHECK_FALSE(r.at("cor2.4").notes.empty());
    }
    ProblemInstance k = builtin("kdv2");
    CHECK_THROWS_AS(check_nonhom_compat_nondeg(k.system, k.op), Degenerate);
}

TEST_CASE("compatibility path selection")
{
    ProblemInstance nd = builtin("threewave");
    auto a = check_compat(nd.system, nd.op);
    CHECK(a.find("cor2.1"));
    CHECK(a.notes.front() == "non-degenerate leading coefficient: evaluated cor2 conditions");
    ProblemInstance dg = builtin("kdv2");
    auto b = check_compat(dg.system, dg.op);
    CHECK(b.find("thmcomp.1"));
    CHECK(b.notes.front() == "degenerate leading coefficient: evaluated thmcomp conditions");
}

TEST_CASE("printed two-wave data is not compatible")
{
    ProblemInstance p = builtin("twowave");
    for (auto form : {ConditionForm::Verbatim, ConditionForm::Corrected}) {
        auto r = check_nonhom_compat(p.system, p.op, form);
        CHECK(r.at("thmcomp.1").pass());
        CHECK(r.at("thmcomp.2").pass());
        CHECK_FALSE(r.at("thmcomp.3").pass());
        CHECK(r.at("thmcomp.3").residual(0, 1) == parse_expr("-2*a*u1", {2, {"a"}, false}));
        CHECK(r.at("thmcomp.4").pass());
        CHECK_FALSE(r.at("thmcomp.5").pass());
    }
}

TEST_CASE("constant shift of W along a direction the operator ignores")
{
    // h + u1 is a density for the shifted system
    ProblemInstance p = builtin("kdv2");
    p.system.W(1) += RationalExpr(1L);
    CHECK(check_compat(p.system, p.op, ConditionForm::Corrected).all_pass());
    CHECK(oracle(p.system, p.op).pass());
    // a shift along u1, on which ω depends, is detected
    ProblemInstance q = builtin("kdv2");
    q.system.W(0) += RationalExpr(1L);
    CHECK_FALSE(check_compat(q.system, q.op, ConditionForm::Corrected).all_pass());
    CHECK_FALSE(oracle(q.system, q.op).pass());
}

TEST_CASE("dimension mismatch")
{
    ProblemInstance a = builtin("kdv1");
    ProblemInstance b = builtin("twowave");
    CHECK_THROWS_AS(check_nonhom_compat(a.system, b.op), DimensionMismatch);
    CHECK_THROWS_AS(check_compat(b.system, a.op), DimensionMismatch);
}
