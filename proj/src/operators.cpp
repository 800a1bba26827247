#include "hamcheck/operators.hpp"

#include "hamcheck/geometry.hpp"

namespace hamcheck {

namespace {

constexpr Slot Up = Slot::Upper;
constexpr Slot Lo = Slot::Lower;

using Idx = std::span<const int>;

ConditionReport make_report(std::string id, std::string description, Tensor residual)
{
    return {std::move(id), std::move(description), std::move(residual), {}};
}

std::string verdict_word(bool pass) { return pass ? "passes" : "fails"; }

void note_form_disagreement(ConditionReport& r, const Tensor& verbatim, const Tensor& corrected, ConditionForm form)
{
    const bool v = verbatim.is_zero();
    const bool c = corrected.is_zero();
    if (v != c) {
        r.notes.push_back(std::string("printed form ") + verdict_word(v) + " but corrected form " + verdict_word(c)
                          + "; reporting the " + to_string(form) + " form");
    }
}

} // namespace

ReportSet check_ultralocal(const UltralocalOperator& op)
{
    const Tensor& w = op.omega;
    const int n = w.dim();
    Tensor dw = gradient(w);
    ReportSet out;
    out.title = "ultralocal Hamiltonian conditions";
    out.reports.push_back(make_report("thmOmega.1", "skew-symmetry w^{ij} + w^{ji}", Tensor::generate(n, {Up, Up}, [&](Idx x) {
        return w(x[0], x[1]) + w(x[1], x[0]);
    })));
    out.reports.push_back(make_report("thmOmega.2", "Jacobi identity", Tensor::generate(n, {Up, Up, Up}, [&](Idx x) {
        const int i = x[0], j = x[1], k = x[2];
        RationalExpr r;
        for (int s = 0; s < n; ++s) {
            r += w(i, s) * dw(j, k, s) + w(j, s) * dw(k, i, s) + w(k, s) * dw(i, j, s);
        }
        return r;
    })));
    return out;
}

Tensor curvature_form(const FirstOrderOperator& op)
{
    const Tensor& g = op.g;
    const Tensor& b = op.b;
    const int n = g.dim();
    Tensor db = gradient(b); // b^{jr}_{k,s} = db(j,r,k,s)
    return Tensor::generate(n, {Up, Up, Up, Lo}, [&](Idx x) {
        const int i = x[0], j = x[1], r = x[2], k = x[3];
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            if (!g(i, s).is_zero()) {
                e += g(i, s) * (db(j, r, s, k) - db(j, r, k, s));
            }
            e += b(i, j, s) * b(s, r, k) - b(i, r, s) * b(s, j, k);
        }
        return e;
    });
}

ReportSet check_first_order_hamiltonian(const FirstOrderOperator& op, ConditionForm form)
{
    const Tensor& g = op.g;
    const Tensor& b = op.b;
    const int n = g.dim();
    Tensor dg = gradient(g);
    Tensor db = gradient(b);
    Tensor curv = curvature_form(op);
    Tensor dcurv = gradient(curv);

    ReportSet out;
    out.title = "first-order Hamiltonian conditions";
    out.reports.push_back(make_report("thmA.1", "symmetry of g", Tensor::generate(n, {Up, Up}, [&](Idx x) {
        return g(x[0], x[1]) - g(x[1], x[0]);
    })));
    out.reports.push_back(make_report("thmA.2", "g^{ij}_{,k} - b^{ij}_k - b^{ji}_k", Tensor::generate(n, {Up, Up, Lo}, [&](Idx x) {
        return dg(x[0], x[1], x[2]) - b(x[0], x[1], x[2]) - b(x[1], x[0], x[2]);
    })));
    out.reports.push_back(make_report("thmA.3", "g^{is}b^{jk}_s - g^{js}b^{ik}_s", Tensor::generate(n, {Up, Up, Up}, [&](Idx x) {
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += g(x[0], s) * b(x[1], x[2], s) - g(x[1], s) * b(x[0], x[2], s);
        }
        return e;
    })));
    out.reports.push_back(make_report("thmA.4", "curvature-type tensor", curv));

    // Sum over cyclic permutations of (i,j,r) of b^{si}_q (b^{jr}_{k,s} − b^{jr}_{s,k}).
    auto cyclic = [&](int i, int j, int r, int q, int k) {
        const int idx[3][3] = {{i, j, r}, {j, r, i}, {r, i, j}};
        RationalExpr e;
        for (const auto& c : idx) {
            for (int s = 0; s < n; ++s) {
                if (!b(s, c[0], q).is_zero()) {
                    e += b(s, c[0], q) * (db(c[1], c[2], k, s) - db(c[1], c[2], s, k));
                }
            }
        }
        return e;
    };
    auto fifth = [&](bool printed) {
        return Tensor::generate(n, {Up, Up, Up, Lo, Lo}, [&](Idx x) {
            const int i = x[0], j = x[1], r = x[2], k = x[3], q = x[4];
            RationalExpr e = dcurv(i, j, r, k, q) + cyclic(i, j, r, q, k) + cyclic(i, j, r, k, q);
            if (printed) {
                RationalExpr bracket;
                for (int s = 0; s < n; ++s) {
                    if (!g(i, s).is_zero()) {
                        bracket += g(i, s) * (db(j, r, s, q) - db(j, r, q, k));
                    }
                    bracket += b(i, j, s) * b(s, r, q) - b(i, r, s) * b(s, j, q);
                }
                e += partial(bracket, k);
            } else {
                e += dcurv(i, j, r, q, k);
            }
            return e;
        });
    };
    Tensor printed = fifth(true);
    Tensor corrected = fifth(false);
    ConditionReport r5 = make_report("thmA.5", "differential curvature identity",
                                     form == ConditionForm::Verbatim ? printed : corrected);
    note_form_disagreement(r5, printed, corrected, form);
    out.reports.push_back(std::move(r5));
    return out;
}

Tensor phi_tensor(const NonHomogeneousOperator& op)
{
    const Tensor& g = op.first.g;
    const Tensor& b = op.first.b;
    const Tensor& w = op.zero.omega;
    const int n = op.dim();
    Tensor dw = gradient(w);
    return Tensor::generate(n, {Up, Up, Up}, [&](Idx x) {
        const int i = x[0], j = x[1], k = x[2];
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += g(i, s) * dw(j, k, s) - b(i, j, s) * w(s, k) - b(i, k, s) * w(j, s);
        }
        return e;
    });
}

ReportSet check_nonhomogeneous_hamiltonian(const NonHomogeneousOperator& op, ConditionForm form)
{
    op.validate();
    const Tensor& b = op.first.b;
    const Tensor& w = op.zero.omega;
    const int n = op.dim();
    ReportSet out = check_first_order_hamiltonian(op.first, form);
    out.append(check_ultralocal(op.zero));
    out.title = "Hamiltonian conditions for a 1+0 operator";

    Tensor phi = phi_tensor(op);
    Tensor dphi = gradient(phi);
    Tensor dw = gradient(w);
    Tensor db = gradient(b);
    out.reports.push_back(make_report("thm1.phi-symmetry", "Phi^{ijk} - Phi^{kij}", Tensor::generate(n, {Up, Up, Up}, [&](Idx x) {
        return phi(x[0], x[1], x[2]) - phi(x[2], x[0], x[1]);
    })));

    auto first_term = [&](int i, int j, int k, int r) {
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            e += b(s, i, r) * dw(j, k, s);
        }
        return e;
    };
    auto second_term = [&](int i, int j, int k, int r) {
        RationalExpr e;
        for (int s = 0; s < n; ++s) {
            if (!w(s, k).is_zero()) {
                e += (db(i, j, r, s) - db(i, j, s, r)) * w(s, k);
            }
        }
        return e;
    };
    auto derivative_condition = [&](bool printed) {
        return Tensor::generate(n, {Up, Up, Up, Lo}, [&](Idx x) {
            const int i = x[0], j = x[1], k = x[2], r = x[3];
            RationalExpr e = dphi(i, j, k, r);
            e -= first_term(i, j, k, r) + first_term(j, k, i, r) + first_term(k, i, j, r);
            if (printed) {
                e -= second_term(i, j, k, r);
            } else {
                e -= second_term(i, j, k, r) + second_term(j, k, i, r) + second_term(k, i, j, r);
            }
            return e;
        });
    };
    Tensor printed = derivative_condition(true);
    Tensor corrected = derivative_condition(false);
    ConditionReport rd = make_report("thm1.phi-derivative", "derivative of Phi against the cyclic sum",
                                     form == ConditionForm::Verbatim ? printed : corrected);
    note_form_disagreement(rd, printed, corrected, form);
    out.reports.push_back(std::move(rd));
    return out;
}

std::optional<std::string> locus_warning(const char* what, const RationalExpr& determinant)
{
    if (determinant.is_zero() || determinant.is_constant()) {
        return std::nullopt;
    }
    return std::string("det ") + what + " = " + determinant.to_string()
           + " is not constant; results hold away from its zero locus";
}

ReportSet check_ferapontov_mokhov(const NonHomogeneousOperator& op)
{
    op.validate();
    const Tensor& g = op.first.g;
    const int n = op.dim();
    RationalExpr dg = det(g);
    if (dg.is_zero()) {
        throw Degenerate("Ferapontov-Mokhov conditions need a non-degenerate leading coefficient");
    }
    ReportSet out;
    out.title = "Ferapontov-Mokhov conditions";
    if (auto w = locus_warning("g", dg)) {
        out.notes.push_back(*w);
    }
    Connection lc = levi_civita(g);
    Tensor dw = covariant_derivative(op.zero.omega, lc); // ∇_s ω^{jk} at (j,k,s)
    Tensor up = raise_last(dw, g);                        // ∇^i ω^{jk} at (i,j,k)
    out.reports.push_back(make_report("fm.1", "nabla^i w^{jk} + nabla^j w^{ik}", Tensor::generate(n, {Up, Up, Up}, [&](Idx x) {
        return up(x[0], x[1], x[2]) + up(x[1], x[0], x[2]);
    })));
    // ∇_s∇_k ω^{ij}, stored at (i,j,k,s).
    out.reports.push_back(make_report("fm.2", "second covariant derivative of w", covariant_derivative(dw, lc)));
    return out;
}

} // namespace hamcheck
