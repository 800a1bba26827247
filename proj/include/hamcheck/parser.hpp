#pragma once

#include "hamcheck/rational_expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamcheck {

/// What identifiers an expression may use.
struct ParseContext {
    int dimension = 0;                   // u1 .. u<dimension>
    std::vector<std::string> parameters; // declared constant names
    bool allow_covectors = false;        // accept p1 .. p<dimension>
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    /// Zero-based character offset of the offending token.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the expression grammar
///
///     expr   := term (('+'|'-') term)*
///     term   := factor (('*'|'/') factor)*
///     factor := base ('^' signed-integer)?
///     base   := rational | ident | '(' expr ')' | '-' base
///
/// into a canonical RationalExpr. Implicit multiplication and function
/// calls are rejected.
RationalExpr parse_expr(std::string_view text, const ParseContext& context);

} // namespace hamcheck
