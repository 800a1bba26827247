#include "hamcheck/compat.hpp"

#include "hamcheck/geometry.hpp"
#include "hamcheck/operators.hpp"

namespace hamcheck {

namespace {

constexpr Slot Up = Slot::Upper;
constexpr Slot Lo = Slot::Lower;

using Idx = std::span<const int>;

ConditionReport make_report(std::string id, std::string description, Tensor residual)
{
    return {std::move(id), std::move(description), std::move(residual), {}};
}

void require_zero(const Tensor& t, const char* message)
{
    if (!t.is_zero()) {
        throw PreconditionViolation(message);
    }
}

Tensor thm8_second(const Tensor& V, const FirstOrderOperator& op)
{
    const Tensor& g = op.g;
    const Tensor& b = op.b;
    const int n = g.dim();
    Tensor dV = gradient(V); // V^j_{s,k} = dV(j,s,k)
    return Tensor::generate(n, {Up, Up, Lo}, [&](Idx x) {
        const int i = x[0], j = x[1], k = x[2];
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            if (!g(i, s).is_zero()) {
                e += g(i, s) * (dV(j, s, k) - dV(j, k, s));
            }
            e += b(i, j, s) * V(s, k) - b(s, j, k) * V(i, s);
        }
        return e;
    });
}

Tensor symmetric_gv(const Tensor& V, const Tensor& g)
{
    const int n = g.dim();
    return Tensor::generate(n, {Up, Up}, [&](Idx x) {
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += g(x[0], s) * V(x[1], s) - g(x[1], s) * V(x[0], s);
        }
        return e;
    });
}

// W^i_{,s}ω^{sj} + W^j_{,s}ω^{is} + ω^{ji}_{,s}W^s
Tensor omega_w_tensor(const Tensor& W, const Tensor& w)
{
    const int n = w.dim();
    Tensor dW = gradient(W);
    Tensor dw = gradient(w);
    return Tensor::generate(n, {Up, Up}, [&](Idx x) {
        const int i = x[0], j = x[1];
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += dW(i, s) * w(s, j) + dW(j, s) * w(i, s) + dw(j, i, s) * W(s);
        }
        return e;
    });
}

void flag_operator(ReportSet& out, const ReportSet& ham)
{
    if (!ham.all_pass()) {
        out.operator_hamiltonian = false;
        std::string failing;
        for (const auto& r : ham.reports) {
            if (!r.pass()) {
                failing += (failing.empty() ? "" : ", ") + r.id;
            }
        }
        out.notes.push_back("operator is not Hamiltonian (" + failing
                            + " fail); compatibility conditions are evaluated anyway");
    }
}

} // namespace

ReportSet check_0order(const QuasilinearSystem& sys, const UltralocalOperator& op, ConditionForm form)
{
    sys.validate();
    const Tensor& W = sys.W;
    const Tensor& w = op.omega;
    const int n = sys.n;
    if (w.dim() != n) {
        throw DimensionMismatch("system and operator have different dimensions");
    }
    require_zero(sys.V, "zero-order check requires V = 0");
    Tensor dW = gradient(W);
    Tensor dw = gradient(w);
    ReportSet out;
    out.title = "zero-order compatibility";
    Tensor direct = Tensor::generate(n, {Up, Up}, [&](Idx x) {
        const int i = x[0], j = x[1];
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += dw(i, j, s) * W(s) - w(i, s) * dW(j, s);
            e += form == ConditionForm::Verbatim ? -w(j, s) * dW(i, s) : -w(s, j) * dW(i, s);
        }
        return e;
    });
    out.reports.push_back(make_report("0order.direct", "w^{ij}_{,s}W^s - w^{sj}W^i_{,s} - w^{is}W^j_{,s}", direct));

    RationalExpr dt = det(w);
    if (!dt.is_zero()) {
        if (auto warn = locus_warning("omega", dt)) {
            out.notes.push_back(*warn);
        }
        Connection sc = symplectic_connection(w);
        Tensor up = raise_last(covariant_derivative(W, sc), w); // ∇̃^i W^j at (i,j)
        ConditionReport cov = make_report("0order.covariant", "nabla~^i W^j - nabla~^j W^i",
                                          Tensor::generate(n, {Up, Up}, [&](Idx x) {
                                              return up(x[0], x[1]) - up(x[1], x[0]);
                                          }));
        if (cov.pass() != out.reports.front().pass()) {
            cov.notes.push_back("verdict differs from 0order.direct in the " + std::string(to_string(form)) + " form");
        }
        out.reports.push_back(std::move(cov));
    }
    return out;
}

ReportSet check_homogeneous(const QuasilinearSystem& sys, const FirstOrderOperator& op)
{
    sys.validate();
    if (op.g.dim() != sys.n) {
        throw DimensionMismatch("system and operator have different dimensions");
    }
    require_zero(sys.W, "homogeneous check requires W = 0");
    ReportSet out;
    out.title = "homogeneous compatibility";
    flag_operator(out, check_first_order_hamiltonian(op, ConditionForm::Corrected));
    out.reports.push_back(make_report("thm8.1", "g^{is}V^j_s - g^{js}V^i_s", symmetric_gv(sys.V, op.g)));
    out.reports.push_back(make_report("thm8.2", "g^{is}(V^j_{s,k} - V^j_{k,s}) + b^{ij}_sV^s_k - b^{sj}_kV^i_s",
                                      thm8_second(sys.V, op)));
    return out;
}

Tensor homogeneous_mixed_tensor(const QuasilinearSystem& sys, const FirstOrderOperator& op)
{
    const Tensor& V = sys.V;
    const Tensor& g = op.g;
    const Tensor& b = op.b;
    const int n = sys.n;
    Tensor dV = gradient(V);
    Tensor dg = gradient(g);
    return Tensor::generate(n, {Up, Up, Lo}, [&](Idx x) {
        const int i = x[0], j = x[1], m = x[2];
        RationalExpr e;
        for (int k = 0; k < n; ++k) {
            e += dg(i, j, k) * V(k, m) + g(i, k) * (dV(j, k, m) - dV(j, m, k)) + g(i, k) * dV(j, k, m)
                 + b(i, k, m) * V(j, k) - dV(i, m, k) * g(k, j) - V(i, k) * dg(k, j, m) - V(i, k) * b(k, j, m);
        }
        return e;
    });
}

Tensor homogeneous_quadratic_tensor(const QuasilinearSystem& sys, const FirstOrderOperator& op)
{
    const Tensor& V = sys.V;
    const Tensor& g = op.g;
    const Tensor& b = op.b;
    const int n = sys.n;
    Tensor dV = gradient(V);
    Tensor ddV = gradient(dV); // V^j_{k,ml} = ddV(j,k,m,l)
    Tensor db = gradient(b);
    return Tensor::generate(n, {Up, Up, Lo, Lo}, [&](Idx x) {
        const int i = x[0], j = x[1], m = x[2], l = x[3];
        RationalExpr e;
        for (int k = 0; k < n; ++k) {
            e += g(i, k) * (ddV(j, k, m, l) + ddV(j, k, l, m) - ddV(j, m, k, l) - ddV(j, l, k, m));
            e += db(i, j, m, k) * V(k, l) + db(i, j, l, k) * V(k, m) + b(i, j, k) * dV(k, l, m) + b(i, j, k) * dV(k, m, l);
            e += b(i, k, l) * dV(j, k, m) + b(i, k, m) * dV(j, k, l) - b(i, k, l) * dV(j, m, k) - b(i, k, m) * dV(j, l, k);
            e -= b(k, j, m) * dV(i, l, k) + b(k, j, l) * dV(i, m, k) + db(k, j, m, l) * V(i, k) + db(k, j, l, m) * V(i, k);
        }
        return e;
    });
}

ReportSet check_tsarev(const QuasilinearSystem& sys, const Tensor& g_upper)
{
    sys.validate();
    if (g_upper.dim() != sys.n) {
        throw DimensionMismatch("system and metric have different dimensions");
    }
    require_zero(sys.W, "Tsarev conditions require W = 0");
    auto gl = inverse(g_upper);
    if (!gl) {
        throw Degenerate("Tsarev conditions need a non-degenerate metric");
    }
    const Tensor& V = sys.V;
    const int n = sys.n;
    ReportSet out;
    out.title = "Tsarev conditions";
    Connection lc = levi_civita(g_upper);
    if (!riemann(lc).is_zero()) {
        out.notes.push_back("metric is not flat; the conditions characterize Hamiltonian systems only for flat metrics");
    }
    out.reports.push_back(make_report("tsarev.1", "g_{is}V^s_j - g_{js}V^s_i", Tensor::generate(n, {Lo, Lo}, [&](Idx x) {
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += (*gl)(x[0], s) * V(s, x[1]) - (*gl)(x[1], s) * V(s, x[0]);
        }
        return e;
    })));
    Tensor dV = covariant_derivative(V, lc); // ∇_i V^j_k at (j,k,i)
    out.reports.push_back(make_report("tsarev.2", "nabla_i V^j_k - nabla_k V^j_i", Tensor::generate(n, {Lo, Up, Lo}, [&](Idx x) {
        const int i = x[0], j = x[1], k = x[2];
        return dV(j, k, i) - dV(j, i, k);
    })));
    return out;
}

Tensor t_tensor(const QuasilinearSystem& sys, const NonHomogeneousOperator& op)
{
    const Tensor& V = sys.V;
    const Tensor& W = sys.W;
    const Tensor& g = op.first.g;
    const Tensor& b = op.first.b;
    const Tensor& w = op.zero.omega;
    const int n = sys.n;
    Tensor dV = gradient(V);
    Tensor dW = gradient(W);
    Tensor ddW = gradient(dW);
    Tensor db = gradient(b);
    Tensor dw = gradient(w);
    return Tensor::generate(n, {Up, Up, Lo}, [&](Idx x) {
        const int i = x[0], j = x[1], k = x[2];
        RationalExpr e;
        for (int l = 0; l < n; ++l) {
            e += -g(i, l) * ddW(j, l, k) + db(i, j, k, l) * W(l) + b(i, j, l) * dW(l, k) - b(i, l, k) * dW(j, l)
                 - b(l, j, k) * dW(i, l);
        }
        for (int s = 0; s < n; ++s) {
            e += -dV(i, k, s) * w(s, j) + w(i, s) * (dV(j, s, k) - dV(j, k, s)) + dw(i, j, s) * V(s, k)
                 - dw(s, j, k) * V(i, s);
        }
        return e;
    });
}

ReportSet check_nonhom_compat(const QuasilinearSystem& sys, const NonHomogeneousOperator& op, ConditionForm form)
{
    require_same_dimension(sys, op);
    const Tensor& V = sys.V;
    const Tensor& W = sys.W;
    const Tensor& g = op.first.g;
    const Tensor& w = op.zero.omega;
    const int n = sys.n;
    Tensor dW = gradient(W);
    Tensor dg = gradient(g);

    ReportSet out;
    out.title = "compatibility conditions (any leading coefficient)";
    flag_operator(out, check_nonhomogeneous_hamiltonian(op, form));
    out.reports.push_back(make_report("thmcomp.1", "V^i_s g^{sj} - V^j_s g^{si}", Tensor::generate(n, {Up, Up}, [&](Idx x) {
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += V(x[0], s) * g(s, x[1]) - V(x[1], s) * g(s, x[0]);
        }
        return e;
    })));
    out.reports.push_back(make_report("thmcomp.2", "g^{is}(V^j_{s,k} - V^j_{k,s}) + b^{ij}_sV^s_k - b^{sj}_kV^i_s",
                                      thm8_second(V, op.first)));
    out.reports.push_back(make_report(
        "thmcomp.3", "g^{ij}_{,s}W^s - g^{js}W^i_{,s} - g^{is}W^j_{,s} - w^{si}V^j_s - w^{sj}V^i_s",
        Tensor::generate(n, {Up, Up}, [&](Idx x) {
            const int i = x[0], j = x[1];
            RationalExpr e;
            for (int s = 0; s < n; ++s) {
                e += dg(i, j, s) * W(s) - g(j, s) * dW(i, s) - g(i, s) * dW(j, s) - w(s, i) * V(j, s) - w(s, j) * V(i, s);
            }
            return e;
        })));
    out.reports.push_back(make_report("thmcomp.4", "W^i_{,s}w^{sj} + W^j_{,s}w^{is} + w^{ji}_{,s}W^s", omega_w_tensor(W, w)));
    out.reports.push_back(make_report("thmcomp.5", "T^{ij}_k", t_tensor(sys, op)));
    return out;
}

ReportSet check_nonhom_compat_nondeg(const QuasilinearSystem& sys, const NonHomogeneousOperator& op, ConditionForm form)
{
    require_same_dimension(sys, op);
    const Tensor& V = sys.V;
    const Tensor& W = sys.W;
    const Tensor& g = op.first.g;
    const Tensor& w = op.zero.omega;
    const int n = sys.n;
    RationalExpr dg = det(g);
    if (dg.is_zero()) {
        throw Degenerate("leading coefficient is degenerate");
    }
    ReportSet out;
    out.title = "compatibility conditions (non-degenerate leading coefficient)";
    flag_operator(out, check_nonhomogeneous_hamiltonian(op, form));
    if (auto warn = locus_warning("g", dg)) {
        out.notes.push_back(*warn);
    }
    Connection lc = levi_civita(g);

    Tensor nv = raise_last(covariant_derivative(V, lc), g); // ∇^iV^j_k at (i,j,k)
    out.reports.push_back(make_report("cor2.1", "nabla^i V^j_k - nabla^j V^i_k", Tensor::generate(n, {Up, Up, Lo}, [&](Idx x) {
        return nv(x[0], x[1], x[2]) - nv(x[1], x[0], x[2]);
    })));
    out.reports.push_back(make_report("cor2.2", "g^{ik}V^j_k - g^{jk}V^i_k", symmetric_gv(V, g)));
    Tensor nw = raise_last(covariant_derivative(W, lc), g); // ∇^iW^j at (i,j)
    out.reports.push_back(make_report(
        "cor2.3", "nabla^i W^j + nabla^j W^i - w^{ik}V^j_k - w^{jk}V^i_k", Tensor::generate(n, {Up, Up}, [&](Idx x) {
            const int i = x[0], j = x[1];
            RationalExpr e = nw(i, j) + nw(j, i);
            for (int k = 0; k < n; ++k) {
                e -= w(i, k) * V(j, k) + w(j, k) * V(i, k);
            }
            return e;
        })));

    RationalExpr dw = det(w);
    if (!dw.is_zero()) {
        Connection sc = symplectic_connection(w);
        Tensor up = raise_last(covariant_derivative(W, sc), w);
        out.reports.push_back(make_report("cor2.4", "nabla~^i W^j - nabla~^j W^i", Tensor::generate(n, {Up, Up}, [&](Idx x) {
            return up(x[0], x[1]) - up(x[1], x[0]);
        })));
    } else {
        ConditionReport r = make_report("cor2.4", "W^i_{,s}w^{sj} + W^j_{,s}w^{is} + w^{ji}_{,s}W^s", omega_w_tensor(W, w));
        r.notes.push_back("omega is degenerate; evaluated through the equivalent form without the symplectic connection");
        out.reports.push_back(std::move(r));
    }
    out.reports.push_back(make_report("cor2.5", "T^{ij}_k", t_tensor(sys, op)));
    return out;
}

ReportSet check_compat(const QuasilinearSystem& sys, const NonHomogeneousOperator& op, ConditionForm form)
{
    require_same_dimension(sys, op);
    if (det(op.first.g).is_zero()) {
        ReportSet out = check_nonhom_compat(sys, op, form);
        out.notes.insert(out.notes.begin(), "degenerate leading coefficient: evaluated thmcomp conditions");
        return out;
    }
    ReportSet out = check_nonhom_compat_nondeg(sys, op, form);
    out.notes.insert(out.notes.begin(), "non-degenerate leading coefficient: evaluated cor2 conditions");
    return out;
}

} // namespace hamcheck
