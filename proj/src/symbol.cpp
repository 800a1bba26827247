#include "hamcheck/symbol.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hamcheck {

namespace {

// Parameter names are interned process-wide. Ids are assigned on first use
// and never reused; the table is guarded so expressions can be built from
// several threads.
class ParameterTable {
public:
    int intern(std::string_view name)
    {
        std::lock_guard lock(mutex_);
        auto it = ids_.find(std::string(name));
        if (it != ids_.end()) {
            return it->second;
        }
        if (names_.size() >= static_cast<std::size_t>(Symbol::kMaxIndex)) {
            throw std::length_error("too many distinct parameter names");
        }
        names_.emplace_back(name);
        int id = static_cast<int>(names_.size());
        ids_.emplace(std::string(name), id);
        return id;
    }

    std::string name(int id) const
    {
        std::lock_guard lock(mutex_);
        return names_.at(static_cast<std::size_t>(id - 1));
    }

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, int> ids_;
    std::vector<std::string> names_;
};

ParameterTable& parameter_table()
{
    static ParameterTable table;
    return table;
}

bool is_indexed_name(std::string_view name)
{
    if (name.size() < 2 || (name[0] != 'u' && name[0] != 'p' && name[0] != 'q')) {
        return false;
    }
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Symbol Symbol::make(SymbolKind kind, int index, int order)
{
    if (index < 0 || index > kMaxIndex) {
        throw std::out_of_range("symbol index out of range");
    }
    if (order < 0 || order > kMaxOrder) {
        throw std::out_of_range("symbol order out of range");
    }
    return Symbol((static_cast<std::uint32_t>(kind) << 30) | (static_cast<std::uint32_t>(index) << 16)
                  | static_cast<std::uint32_t>(order));
}

Symbol Symbol::u(int index, int order)
{
    if (index < 1) {
        throw std::out_of_range("field index must be >= 1");
    }
    return make(SymbolKind::Field, index, order);
}

Symbol Symbol::p(int index, int order)
{
    if (index < 1) {
        throw std::out_of_range("covector index must be >= 1");
    }
    return make(SymbolKind::Covector, index, order);
}

Symbol Symbol::q(int index, int order)
{
    if (index < 1) {
        throw std::out_of_range("vector index must be >= 1");
    }
    return make(SymbolKind::Vector, index, order);
}

Symbol Symbol::parameter(std::string_view name)
{
    if (!is_valid_parameter_name(name)) {
        throw std::invalid_argument("invalid parameter name '" + std::string(name) + "'");
    }
    return make(SymbolKind::Parameter, parameter_table().intern(name), 0);
}

Symbol Symbol::shifted(int by) const
{
    if (is_parameter()) {
        throw std::logic_error("parameters have no jet prolongation");
    }
    return make(kind(), index(), order() + by);
}

std::string Symbol::name() const
{
    if (is_parameter()) {
        return parameter_table().name(index());
    }
    std::string out;
    switch (kind()) {
    case SymbolKind::Field: out = "u"; break;
    case SymbolKind::Covector: out = "p"; break;
    case SymbolKind::Vector: out = "q"; break;
    case SymbolKind::Parameter: break;
    }
    out += std::to_string(index());
    if (order() > 0) {
        out += '_';
        if (order() <= 3) {
            out.append(static_cast<std::size_t>(order()), 'x');
        } else {
            out += 'x';
            out += std::to_string(order());
        }
    }
    return out;
}

bool is_valid_parameter_name(std::string_view name)
{
    if (name.empty()) {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
        return false;
    }
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return !is_indexed_name(name);
}

} // namespace hamcheck
