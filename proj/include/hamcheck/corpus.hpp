#pragma once

#include "hamcheck/model.hpp"
#include "hamcheck/report.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace hamcheck {

inline constexpr const char* kProblemFormat = "hamcheck-problem/1";

/// Condition-set ids used in ProblemInstance::expected.
namespace check_set {
inline constexpr const char* kHamiltonian = "hamiltonian";
inline constexpr const char* kFerapontovMokhov = "ferapontov-mokhov";
inline constexpr const char* kThmcomp = "thmcomp";
inline constexpr const char* kCor2 = "cor2";
inline constexpr const char* kOracle = "oracle";
} // namespace check_set

struct ProblemInstance {
    std::string name;
    std::vector<std::string> parameters;
    QuasilinearSystem system;
    NonHomogeneousOperator op;
    /// b was derived from the metric rather than given entrywise.
    bool b_from_metric = false;
    std::map<std::string, bool> expected;

    bool operator==(const ProblemInstance& o) const;
};

/// Problem files that fail to load.
class LoadError : public Error {
public:
    using Error::Error;
};

std::vector<std::string> builtin_names();
/// Throws Error for an unknown name.
ProblemInstance builtin(const std::string& name);

ProblemInstance parse_problem(const std::string& json_text);
std::string serialize_problem(const ProblemInstance& p);
ProblemInstance load(const std::filesystem::path& path);
void save(const ProblemInstance& p, const std::filesystem::path& path);

/// A builtin name or a path to a problem file.
ProblemInstance resolve(const std::string& name_or_path);

struct SuiteEntry {
    std::string check_set;
    bool expected = true;
    bool actual = false;
    ReportSet reports;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteEntry> entries;
    bool all_match() const;
};

/// Runs every condition set named in `expected` and records the verdicts.
SuiteResult run_suite(const ProblemInstance& p, ConditionForm form);

} // namespace hamcheck
