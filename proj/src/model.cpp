#include "hamcheck/model.hpp"

#include "hamcheck/report.hpp"

namespace hamcheck {

QuasilinearSystem QuasilinearSystem::zero(int n)
{
    return {n, Tensor::endomorphism(n), Tensor::vector(n)};
}

bool depends_on_fields_only(const Tensor& t)
{
    return t.is_free_of([](Symbol s) { return !(s.is_parameter() || (s.kind() == SymbolKind::Field && s.order() == 0)); });
}

namespace {

void require_shape(const Tensor& t, int n, int rank, const char* what)
{
    if (t.dim() != n || t.rank() != rank) {
        throw DimensionMismatch(std::string(what) + " has shape inconsistent with dimension " + std::to_string(n));
    }
    if (!depends_on_fields_only(t)) {
        throw PreconditionViolation(std::string(what) + " must depend on field variables only");
    }
}

} // namespace

void QuasilinearSystem::validate() const
{
    require_shape(V, n, 2, "V");
    require_shape(W, n, 1, "W");
}

FirstOrderOperator FirstOrderOperator::zero(int n)
{
    return {Tensor::bivector(n), Tensor(n, {Slot::Upper, Slot::Upper, Slot::Lower})};
}

NonHomogeneousOperator NonHomogeneousOperator::null(int n)
{
    return {FirstOrderOperator::zero(n), {Tensor::bivector(n)}};
}

void NonHomogeneousOperator::validate() const
{
    const int n = dim();
    require_shape(first.g, n, 2, "g");
    require_shape(first.b, n, 3, "b");
    require_shape(zero.omega, n, 2, "omega");
}

void require_same_dimension(const QuasilinearSystem& sys, const NonHomogeneousOperator& op)
{
    if (sys.n != op.dim()) {
        throw DimensionMismatch("system has dimension " + std::to_string(sys.n) + " but operator has dimension "
                                + std::to_string(op.dim()));
    }
    sys.validate();
    op.validate();
}

const char* to_string(ConditionForm f) { return f == ConditionForm::Verbatim ? "verbatim" : "corrected"; }

std::optional<ConditionForm> parse_form(std::string_view s)
{
    if (s == "verbatim") {
        return ConditionForm::Verbatim;
    }
    if (s == "corrected") {
        return ConditionForm::Corrected;
    }
    return std::nullopt;
}

bool ReportSet::all_pass() const
{
    for (const auto& r : reports) {
        if (!r.pass()) {
            return false;
        }
    }
    return true;
}

const ConditionReport* ReportSet::find(std::string_view id) const
{
    for (const auto& r : reports) {
        if (r.id == id) {
            return &r;
        }
    }
    return nullptr;
}

const ConditionReport& ReportSet::at(std::string_view id) const
{
    const ConditionReport* r = find(id);
    if (!r) {
        throw std::out_of_range("no report with id " + std::string(id));
    }
    return *r;
}

void ReportSet::append(const ReportSet& other)
{
    reports.insert(reports.end(), other.reports.begin(), other.reports.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    operator_hamiltonian = operator_hamiltonian && other.operator_hamiltonian;
}

} // namespace hamcheck
