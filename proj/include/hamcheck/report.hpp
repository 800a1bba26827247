#pragma once

#include "hamcheck/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hamcheck {

/// Which rendering of a condition with a known misprint to evaluate.
enum class ConditionForm { Verbatim, Corrected };

const char* to_string(ConditionForm f);
std::optional<ConditionForm> parse_form(std::string_view s);

/// One tensorial condition: its frozen id and full residual.
struct ConditionReport {
    std::string id;
    std::string description;
    Tensor residual;
    std::vector<std::string> notes;

    bool pass() const { return residual.is_zero(); }
};

/// Result of running a condition set.
struct ReportSet {
    std::string title;
    std::vector<ConditionReport> reports;
    std::vector<std::string> notes;
    /// Soft precondition flag: false when the operator-side Hamiltonian
    /// conditions failed while a compatibility check still ran.
    bool operator_hamiltonian = true;

    bool all_pass() const;
    const ConditionReport* find(std::string_view id) const;
    const ConditionReport& at(std::string_view id) const;
    void append(const ReportSet& other);
};

} // namespace hamcheck
