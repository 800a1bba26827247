#include "hamcheck/corpus.hpp"

#include "hamcheck/compat.hpp"
#include "hamcheck/covering.hpp"
#include "hamcheck/geometry.hpp"
#include "hamcheck/operators.hpp"
#include "hamcheck/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hamcheck {

using nlohmann::json;

namespace {

constexpr Slot Up = Slot::Upper;
constexpr Slot Lo = Slot::Lower;

struct Builder {
    int n;
    ParseContext ctx;

    Builder(int dim, std::vector<std::string> params) : n(dim)
    {
        ctx.dimension = dim;
        ctx.parameters = std::move(params);
    }

    RationalExpr expr(const std::string& s) const { return parse_expr(s, ctx); }

    Tensor matrix(const std::vector<std::vector<std::string>>& rows, std::vector<Slot> slots) const
    {
        std::vector<std::vector<RationalExpr>> r;
        for (const auto& row : rows) {
            std::vector<RationalExpr> line;
            for (const auto& s : row) {
                line.push_back(expr(s));
            }
            r.push_back(std::move(line));
        }
        return Tensor::from_rows(r, std::move(slots));
    }

    Tensor vec(const std::vector<std::string>& v) const
    {
        Tensor t = Tensor::vector(n);
        for (int i = 0; i < n; ++i) {
            t(i) = expr(v[static_cast<std::size_t>(i)]);
        }
        return t;
    }
};

ProblemInstance make(std::string name, std::vector<std::string> params, int n,
                     const std::vector<std::vector<std::string>>& V, const std::vector<std::string>& W,
                     const std::vector<std::vector<std::string>>& g, const std::vector<std::vector<std::string>>& omega,
                     bool derive_b, std::vector<std::string> expected_sets)
{
    Builder b(n, params);
    ProblemInstance p;
    p.name = std::move(name);
    p.parameters = std::move(params);
    p.system = {n, b.matrix(V, {Up, Lo}), b.vec(W)};
    p.op = NonHomogeneousOperator::null(n);
    p.op.first.g = b.matrix(g, {Up, Up});
    p.op.zero.omega = b.matrix(omega, {Up, Up});
    p.b_from_metric = derive_b;
    if (derive_b) {
        p.op.first.b = hamcheck::b_from_metric(p.op.first.g);
    }
    for (auto& s : expected_sets) {
        p.expected.emplace(std::move(s), true);
    }
    return p;
}

const std::vector<std::string> kDegenerateSets = {check_set::kHamiltonian, check_set::kThmcomp, check_set::kOracle};
const std::vector<std::string> kNondegenerateSets = {check_set::kHamiltonian, check_set::kFerapontovMokhov,
                                                     check_set::kThmcomp, check_set::kCor2, check_set::kOracle};

} // namespace

bool ProblemInstance::operator==(const ProblemInstance& o) const
{
    return name == o.name && parameters == o.parameters && system.n == o.system.n && system.V == o.system.V
           && system.W == o.system.W && op.first.g == o.op.first.g && op.first.b == o.op.first.b
           && op.zero.omega == o.op.zero.omega && b_from_metric == o.b_from_metric && expected == o.expected;
}

std::vector<std::string> builtin_names()
{
    return {"kdv1", "kdv2", "twowave", "sinhgordon", "threewave", "twowave-corrected"};
}

ProblemInstance builtin(const std::string& name)
{
    const std::vector<std::vector<std::string>> kdv_V = {{"0", "0", "0"}, {"0", "0", "0"}, {"-1", "0", "0"}};
    const std::vector<std::string> kdv_W = {"u2", "u3", "6*u1*u2"};
    if (name == "kdv1") {
        return make(name, {}, 3, kdv_V, kdv_W, {{"0", "0", "1"}, {"0", "-1", "0"}, {"1", "0", "8*u1"}},
                    {{"0", "2*u1", "2*u2"}, {"-2*u1", "0", "-12*u1^2 + 2*u3"}, {"-2*u2", "12*u1^2 - 2*u3", "0"}}, true,
                    kNondegenerateSets);
    }
    if (name == "kdv2") {
        return make(name, {}, 3, kdv_V, kdv_W, {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-1"}},
                    {{"0", "-1", "0"}, {"1", "0", "6*u1"}, {"0", "-6*u1", "0"}}, false, kDegenerateSets);
    }
    if (name == "twowave" || name == "twowave-corrected") {
        const bool corrected = name == "twowave-corrected";
        return make(name, {"a"}, 2, {{"0", "0"}, {"0", "a"}}, {"a*u1*u2", "u1^2"}, {{"0", "0"}, {"0", "1"}},
                    corrected ? std::vector<std::vector<std::string>>{{"0", "u1"}, {"-u1", "0"}}
                              : std::vector<std::vector<std::string>>{{"0", "-u1"}, {"u1", "0"}},
                    false, kDegenerateSets);
    }
    if (name == "sinhgordon") {
        return make(name, {}, 2, {{"0", "0"}, {"0", "1"}}, {"u1*u2/2", "(u1^2 - 1/u1^2)/2"}, {{"0", "0"}, {"0", "1"}},
                    {{"0", "u1/2"}, {"-u1/2", "0"}}, false, kDegenerateSets);
    }
    if (name == "threewave") {
        return make(name, {"c1", "c2", "c3"}, 3, {{"-c1", "0", "0"}, {"0", "-c2", "0"}, {"0", "0", "-c3"}},
                    {"-2*(c2-c3)*u2*u3", "-2*(c1-c3)*u1*u3", "-2*(c2-c1)*u1*u2"},
                    {{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "-1"}},
                    {{"0", "-2*u3", "2*u2"}, {"2*u3", "0", "2*u1"}, {"-2*u2", "-2*u1", "0"}}, false, kNondegenerateSets);
    }
    throw Error("unknown builtin '" + name + "'");
}

namespace {

std::string where(const std::string& path, std::initializer_list<int> idx)
{
    std::string s = path;
    for (int i : idx) {
        s += "[" + std::to_string(i) + "]";
    }
    return s;
}

RationalExpr read_expr(const json& j, const std::string& at, const ParseContext& ctx)
{
    if (!j.is_string()) {
        throw LoadError(at + ": expected an expression string");
    }
    try {
        return parse_expr(j.get<std::string>(), ctx);
    } catch (const ParseError& e) {
        throw LoadError(at + ": parse error " + e.what());
    }
}

int square_size(const json& j, const std::string& name)
{
    if (!j.is_array()) {
        throw LoadError(name + ": expected an array");
    }
    return static_cast<int>(j.size());
}

Tensor read_matrix(const json& doc, const std::string& name, int n, std::vector<Slot> slots, const ParseContext& ctx)
{
    if (!doc.contains(name)) {
        throw LoadError("missing field '" + name + "'");
    }
    const json& j = doc.at(name);
    Tensor t(n, std::move(slots));
    for (int i = 0; i < n; ++i) {
        const json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw DimensionMismatch(where(name, {i}) + ": expected " + std::to_string(n) + " entries");
        }
        for (int k = 0; k < n; ++k) {
            t(i, k) = read_expr(row.at(static_cast<std::size_t>(k)), where(name, {i, k}), ctx);
        }
    }
    return t;
}

json write_tensor(const Tensor& t)
{
    if (t.rank() == 1) {
        json a = json::array();
        for (int i = 0; i < t.dim(); ++i) {
            a.push_back(t(i).to_string());
        }
        return a;
    }
    json a = json::array();
    for (int i = 0; i < t.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < t.dim(); ++k) {
            if (t.rank() == 2) {
                row.push_back(t(i, k).to_string());
            } else {
                json inner = json::array();
                for (int l = 0; l < t.dim(); ++l) {
                    inner.push_back(t(i, k, l).to_string());
                }
                row.push_back(std::move(inner));
            }
        }
        a.push_back(std::move(row));
    }
    return a;
}

} // namespace

ProblemInstance parse_problem(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw LoadError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw LoadError("problem document must be an object");
    }
    if (doc.value("format", "") != kProblemFormat) {
        throw LoadError(std::string("missing or unsupported format tag (expected \"") + kProblemFormat + "\")");
    }
    ProblemInstance p;
    try {
        p.name = doc.value("name", "");
        p.parameters = doc.value("parameters", std::vector<std::string>{});
        if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer()) {
            throw LoadError("missing integer field 'dimension'");
        }
        const int n = doc.at("dimension").get<int>();
        if (n < 1 || n > 64) {
            throw LoadError("dimension must be between 1 and 64");
        }
        for (const auto& name : p.parameters) {
            if (!is_valid_parameter_name(name)) {
                throw LoadError("invalid parameter name '" + name + "'");
            }
        }
        for (const char* f : {"V", "W", "g", "omega"}) {
            if (!doc.contains(f)) {
                throw LoadError(std::string("missing field '") + f + "'");
            }
        }
        const int sys_n = square_size(doc.at("V"), "V");
        const int op_n = square_size(doc.at("g"), "g");
        if (sys_n != op_n) {
            throw DimensionMismatch("system has dimension " + std::to_string(sys_n) + " but operator has dimension "
                                    + std::to_string(op_n));
        }
        if (sys_n != n || square_size(doc.at("W"), "W") != n || square_size(doc.at("omega"), "omega") != n) {
            throw DimensionMismatch("field shapes do not match dimension " + std::to_string(n));
        }
        ParseContext ctx;
        ctx.dimension = n;
        ctx.parameters = p.parameters;
        p.system.n = n;
        p.system.V = read_matrix(doc, "V", n, {Up, Lo}, ctx);
        p.system.W = Tensor::vector(n);
        for (int i = 0; i < n; ++i) {
            p.system.W(i) = read_expr(doc.at("W").at(static_cast<std::size_t>(i)), where("W", {i}), ctx);
        }
        p.op = NonHomogeneousOperator::null(n);
        p.op.first.g = read_matrix(doc, "g", n, {Up, Up}, ctx);
        p.op.zero.omega = read_matrix(doc, "omega", n, {Up, Up}, ctx);
        const json& jb = doc.contains("b") ? doc.at("b") : json("0");
        if (jb.is_string() && jb.get<std::string>() == "from-metric") {
            p.b_from_metric = true;
            try {
                p.op.first.b = b_from_metric(p.op.first.g);
            } catch (const Error& e) {
                throw LoadError(std::string("b: cannot derive from metric: ") + e.what());
            }
        } else if (!doc.contains("b")) {
            throw LoadError("missing field 'b' (give a tensor or \"from-metric\")");
        } else {
            if (square_size(jb, "b") != n) {
                throw DimensionMismatch("b has dimension " + std::to_string(jb.size()) + ", expected " + std::to_string(n));
            }
            for (int i = 0; i < n; ++i) {
                const json& m = jb.at(static_cast<std::size_t>(i));
                if (!m.is_array() || static_cast<int>(m.size()) != n) {
                    throw DimensionMismatch(where("b", {i}) + ": expected " + std::to_string(n) + " entries");
                }
                for (int j = 0; j < n; ++j) {
                    const json& row = m.at(static_cast<std::size_t>(j));
                    if (!row.is_array() || static_cast<int>(row.size()) != n) {
                        throw DimensionMismatch(where("b", {i, j}) + ": expected " + std::to_string(n) + " entries");
                    }
                    for (int k = 0; k < n; ++k) {
                        p.op.first.b(i, j, k) = read_expr(row.at(static_cast<std::size_t>(k)), where("b", {i, j, k}), ctx);
                    }
                }
            }
        }
        if (doc.contains("expected")) {
            for (const auto& [k, v] : doc.at("expected").items()) {
                if (!v.is_boolean()) {
                    throw LoadError("expected." + k + ": must be a boolean");
                }
                p.expected.emplace(k, v.get<bool>());
            }
        }
    } catch (const json::exception& e) {
        throw LoadError(std::string("schema violation: ") + e.what());
    }
    return p;
}

std::string serialize_problem(const ProblemInstance& p)
{
    json doc = json::object();
    doc["format"] = kProblemFormat;
    doc["name"] = p.name;
    doc["dimension"] = p.system.n;
    doc["parameters"] = p.parameters;
    doc["V"] = write_tensor(p.system.V);
    doc["W"] = write_tensor(p.system.W);
    doc["g"] = write_tensor(p.op.first.g);
    doc["b"] = p.b_from_metric ? json("from-metric") : write_tensor(p.op.first.b);
    doc["omega"] = write_tensor(p.op.zero.omega);
    doc["expected"] = p.expected;
    return doc.dump(2) + "\n";
}

ProblemInstance load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw LoadError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

void save(const ProblemInstance& p, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << serialize_problem(p);
}

ProblemInstance resolve(const std::string& name_or_path)
{
    const auto names = builtin_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
        return builtin(name_or_path);
    }
    return load(name_or_path);
}

bool SuiteResult::all_match() const
{
    for (const auto& e : entries) {
        if (e.expected != e.actual) {
            return false;
        }
    }
    return true;
}

SuiteResult run_suite(const ProblemInstance& p, ConditionForm form)
{
    SuiteResult out;
    out.name = p.name;
    for (const auto& [set, expected] : p.expected) {
        SuiteEntry e;
        e.check_set = set;
        e.expected = expected;
        if (set == check_set::kHamiltonian) {
            e.reports = check_nonhomogeneous_hamiltonian(p.op, form);
        } else if (set == check_set::kFerapontovMokhov) {
            e.reports = check_ferapontov_mokhov(p.op);
        } else if (set == check_set::kThmcomp) {
            e.reports = check_nonhom_compat(p.system, p.op, form);
        } else if (set == check_set::kCor2) {
            e.reports = check_nonhom_compat_nondeg(p.system, p.op, form);
        } else if (set == check_set::kOracle) {
            OracleResidual r = oracle(p.system, p.op);
            e.reports.title = "covering oracle";
            for (const auto& [name, t] : r.classes) {
                e.reports.reports.push_back({"oracle." + name, "coefficient of " + name, t, {}});
            }
        } else {
            throw Error("unknown condition set '" + set + "' in expected verdicts");
        }
        e.actual = e.reports.all_pass();
        out.entries.push_back(std::move(e));
    }
    return out;
}

} // namespace hamcheck
