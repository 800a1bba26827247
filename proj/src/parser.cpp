#include "hamcheck/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hamcheck {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const ParseContext& ctx) : text_(text), ctx_(ctx) {}

    RationalExpr parse()
    {
        skip_space();
        if (at_end()) {
            throw ParseError(pos_, "empty expression");
        }
        RationalExpr e = expr();
        skip_space();
        if (!at_end()) {
            fail_unexpected();
        }
        return e;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail_unexpected() const
    {
        if (at_end()) {
            throw ParseError(pos_, "unexpected end of input");
        }
        throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }

    // After a complete operand, anything other than an operator, ')' or the
    // end is implicit multiplication or junk.
    void check_operand_end()
    {
        std::size_t save = pos_;
        skip_space();
        char c = peek();
        if (at_end() || c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == ')') {
            pos_ = save;
            return;
        }
        if (c == '(') {
            throw ParseError(pos_, "function application and implicit multiplication are not supported");
        }
        throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
    }

    RationalExpr expr()
    {
        RationalExpr acc = term();
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') {
                return acc;
            }
            ++pos_;
            RationalExpr rhs = term();
            if (c == '+') {
                acc += rhs;
            } else {
                acc -= rhs;
            }
        }
    }

    RationalExpr term()
    {
        RationalExpr acc = factor();
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '*' && c != '/') {
                return acc;
            }
            ++pos_;
            skip_space();
            std::size_t at = pos_;
            RationalExpr rhs = factor();
            if (c == '*') {
                acc *= rhs;
            } else {
                if (rhs.is_zero()) {
                    bool literal = std::isdigit(static_cast<unsigned char>(text_[at])) != 0;
                    throw ParseError(at, literal ? "zero denominator literal" : "division by zero");
                }
                acc /= rhs;
            }
        }
    }

    RationalExpr factor()
    {
        RationalExpr b = base();
        skip_space();
        if (peek() != '^') {
            return b;
        }
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_space();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError(pos_, "exponent must be an integer");
        }
        long value = read_integer_small(at);
        check_operand_end();
        int exponent = static_cast<int>(negative ? -value : value);
        if (exponent < 0 && b.is_zero()) {
            throw ParseError(at, "zero raised to a negative power");
        }
        return b.pow(exponent);
    }

    RationalExpr base()
    {
        skip_space();
        char c = peek();
        if (c == '-') {
            // Unary minus takes the whole power: -u1^2 is -(u1^2).
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            RationalExpr e = expr();
            skip_space();
            if (peek() != ')') {
                throw ParseError(pos_, "expected ')'");
            }
            ++pos_;
            check_operand_end();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return rational();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return identifier();
        }
        fail_unexpected();
    }

    RationalExpr rational()
    {
        mpz_class num = read_integer();
        check_operand_end();
        return RationalExpr(Rational(num));
    }

    RationalExpr identifier()
    {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            ++pos_;
        }
        std::string_view id = text_.substr(start, pos_ - start);
        check_operand_end();

        if (id.size() >= 2 && (id[0] == 'u' || id[0] == 'p')
            && std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            int index = 0;
            auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), index);
            if (ec != std::errc() || index < 1 || index > ctx_.dimension) {
                throw ParseError(start, "index out of range in '" + std::string(id) + "' (dimension "
                                            + std::to_string(ctx_.dimension) + ")");
            }
            if (id[0] == 'p') {
                if (!ctx_.allow_covectors) {
                    throw ParseError(start, "covector symbol '" + std::string(id) + "' not allowed here");
                }
                return RationalExpr(Symbol::p(index));
            }
            return RationalExpr(Symbol::u(index));
        }
        if (std::find(ctx_.parameters.begin(), ctx_.parameters.end(), id) != ctx_.parameters.end()) {
            return RationalExpr(Symbol::parameter(id));
        }
        throw ParseError(start, "unknown identifier '" + std::string(id) + "'");
    }

    mpz_class read_integer()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    long read_integer_small(std::size_t at)
    {
        mpz_class v = read_integer();
        if (v > 4096) {
            throw ParseError(at, "exponent too large");
        }
        return v.get_si();
    }

    std::string_view text_;
    const ParseContext& ctx_;
    std::size_t pos_ = 0;
};

} // namespace

RationalExpr parse_expr(std::string_view text, const ParseContext& context)
{
    return Parser(text, context).parse();
}

} // namespace hamcheck
