#include "hamcheck/cli.hpp"

#include "hamcheck/compat.hpp"
#include "hamcheck/corpus.hpp"
#include "hamcheck/covering.hpp"
#include "hamcheck/operators.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hamcheck {

using nlohmann::ordered_json;

namespace {

std::string index_label(const std::vector<int>& idx)
{
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        s += (k ? "," : "") + std::to_string(idx[k] + 1);
    }
    return s;
}

ordered_json report_json(const ReportSet& set)
{
    ordered_json conditions = ordered_json::array();
    for (const auto& r : set.reports) {
        ordered_json residual = ordered_json::array();
        for (const auto& [idx, value] : r.residual.nonzero_entries()) {
            ordered_json index = ordered_json::array();
            for (int i : idx) {
                index.push_back(i + 1);
            }
            residual.push_back({{"index", index}, {"value", value.to_string()}});
        }
        conditions.push_back({{"id", r.id},
                              {"verdict", r.pass() ? "pass" : "fail"},
                              {"description", r.description},
                              {"residual", residual},
                              {"notes", r.notes}});
    }
    return {{"title", set.title},
            {"verdict", set.all_pass() ? "pass" : "fail"},
            {"operator_hamiltonian", set.operator_hamiltonian},
            {"notes", set.notes},
            {"conditions", conditions}};
}

void report_text(std::ostream& os, const ReportSet& set)
{
    os << set.title << ": " << (set.all_pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& n : set.notes) {
        os << "  note: " << n << "\n";
    }
    for (const auto& r : set.reports) {
        os << "  " << std::left << std::setw(22) << r.id << (r.pass() ? "pass" : "FAIL") << "  " << r.description
           << "\n";
        for (const auto& n : r.notes) {
            os << "      note: " << n << "\n";
        }
        for (const auto& [idx, value] : r.residual.nonzero_entries()) {
            os << "      [" << index_label(idx) << "] " << value.to_string() << "\n";
        }
    }
}

ReportSet oracle_reports(const ProblemInstance& p)
{
    OracleResidual r = oracle(p.system, p.op);
    ReportSet set;
    set.title = "covering oracle";
    set.notes.push_back("necessary conditions only; vanishing residuals do not establish Hamiltonianity");
    for (const auto& [name, t] : r.classes) {
        set.reports.push_back({"oracle." + name, "coefficient of " + name, t, {}});
    }
    return set;
}

struct Options {
    std::string target;
    std::string form = "verbatim";
    std::string output;
    bool json = false;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of Hamiltonian operators and their compatibility with quasilinear systems",
                 "hamcheck"};
    Options opt;
    app.add_option("--form", opt.form, "Condition form: verbatim or corrected")
        ->check(CLI::IsMember({"verbatim", "corrected"}));
    app.add_option("--output", opt.output, "Write the report to this file instead of standard output");
    app.add_flag("--json", opt.json, "Emit a structured JSON report");
    app.require_subcommand(1, 1);
    app.fallthrough();

    auto* op_cmd = app.add_subcommand("check-operator", "Hamiltonianity conditions of the operator");
    auto* compat_cmd = app.add_subcommand("check-compat", "Compatibility of system and operator");
    auto* oracle_cmd = app.add_subcommand("oracle", "Expand the linearized operator on the cotangent covering");
    auto* corpus_cmd = app.add_subcommand("corpus", "List built-in problems and run the golden suite");
    for (auto* c : {op_cmd, compat_cmd, oracle_cmd}) {
        c->add_option("target", opt.target, "Built-in name or problem file")->required();
    }

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const ConditionForm form = *parse_form(opt.form);

    ordered_json doc;
    std::ostringstream text;
    bool pass = true;
    try {
        if (corpus_cmd->parsed()) {
            ordered_json suite = ordered_json::array();
            text << "built-in problems:";
            for (const auto& n : builtin_names()) {
                text << " " << n;
            }
            text << "\n";
            for (const auto& n : builtin_names()) {
                SuiteResult r = run_suite(builtin(n), form);
                ordered_json entries = ordered_json::array();
                text << n << ": " << (r.all_match() ? "as expected" : "MISMATCH") << "\n";
                for (const auto& e : r.entries) {
                    entries.push_back({{"check_set", e.check_set},
                                       {"expected", e.expected ? "pass" : "fail"},
                                       {"actual", e.actual ? "pass" : "fail"}});
                    text << "  " << std::left << std::setw(20) << e.check_set << "expected "
                         << (e.expected ? "pass" : "fail") << ", got " << (e.actual ? "pass" : "fail") << "\n";
                    for (const auto& rep : e.reports.reports) {
                        if (!rep.pass()) {
                            text << "      " << rep.id << " fails\n";
                        }
                    }
                }
                suite.push_back({{"name", n}, {"matches_expected", r.all_match()}, {"entries", entries}});
                pass = pass && r.all_match();
            }
            doc = {{"command", "corpus"}, {"form", to_string(form)}, {"builtins", builtin_names()}, {"suite", suite}};
        } else {
            ProblemInstance p = resolve(opt.target);
            std::vector<ReportSet> sets;
            std::string command;
            if (op_cmd->parsed()) {
                command = "check-operator";
                sets.push_back(check_nonhomogeneous_hamiltonian(p.op, form));
                if (!det(p.op.first.g).is_zero()) {
                    sets.push_back(check_ferapontov_mokhov(p.op));
                } else {
                    sets.back().notes.push_back("degenerate leading coefficient: Ferapontov-Mokhov conditions skipped");
                }
            } else if (compat_cmd->parsed()) {
                command = "check-compat";
                sets.push_back(check_compat(p.system, p.op, form));
            } else {
                command = "oracle";
                sets.push_back(oracle_reports(p));
            }
            ordered_json jsets = ordered_json::array();
            text << command << " " << (p.name.empty() ? opt.target : p.name) << " (form: " << to_string(form)
                 << ")\n";
            for (const auto& s : sets) {
                jsets.push_back(report_json(s));
                report_text(text, s);
                pass = pass && s.all_pass();
            }
            doc = {{"command", command},
                   {"target", p.name.empty() ? opt.target : p.name},
                   {"form", to_string(form)},
                   {"verdict", pass ? "pass" : "fail"},
                   {"reports", jsets}};
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string rendered = opt.json ? doc.dump(2) + "\n" : text.str();
    if (opt.output.empty()) {
        out << rendered;
    } else {
        std::ofstream f(opt.output);
        if (!f) {
            err << "error: cannot write " << opt.output << "\n";
            return 2;
        }
        f << rendered;
    }
    return pass ? 0 : 1;
}

} // namespace hamcheck
