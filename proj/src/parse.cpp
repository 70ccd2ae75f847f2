#include "resq/parse.hpp"

#include "resq/errors.hpp"

#include <cctype>

namespace resq {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPolynomial parse() {
        skip_space();
        if (at_end()) throw ParseError("empty input", pos_);
        IntPolynomial result = expr();
        skip_space();
        if (!at_end()) {
            if (starts_operand()) throw ParseError("implicit multiplication is not allowed; write '*'", pos_);
            if (peek() == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
        }
        return result;
    }

private:
    IntPolynomial expr() {
        IntPolynomial acc = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    IntPolynomial term() {
        IntPolynomial acc = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                acc *= unary();
                check_degree(acc);
            } else {
                if (starts_operand()) throw ParseError("implicit multiplication is not allowed; write '*'", pos_);
                return acc;
            }
        }
    }

    IntPolynomial unary() {
        skip_space();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    IntPolynomial power() {
        IntPolynomial base = primary();
        skip_space();
        const std::size_t caret = pos_;
        if (!accept('^')) return base;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("exponent must be a non-negative integer literal", pos_);
        }
        const std::size_t literal_pos = pos_;
        const Integer exponent = integer_literal();
        if (exponent > kMaxExponent) throw ParseError("exponent overflow (limit 10^6)", literal_pos);
        const std::uint64_t e = exponent.get_ui();
        if (!base.is_zero() && *base.degree() * e > kMaxExponent) {
            throw ParseError("degree overflow (limit 10^6)", caret);
        }
        return pow(base, e);
    }

    IntPolynomial primary() {
        skip_space();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return IntPolynomial::constant(integer_literal());
        if (c == 'x') {
            ++pos_;
            return IntPolynomial::monomial(1, 1);
        }
        if (c == '(') {
            const std::size_t open = pos_++;
            IntPolynomial inner = expr();
            skip_space();
            if (!accept(')')) throw ParseError("missing ')' for '(' opened at position " + std::to_string(open), pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Integer integer_literal() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void check_degree(const IntPolynomial& f) const {
        if (!f.is_zero() && *f.degree() > kMaxExponent) throw ParseError("degree overflow (limit 10^6)", pos_);
    }

    bool starts_operand() const {
        if (at_end()) return false;
        const char c = peek();
        return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

template <typename T>
std::string format_terms(const Polynomial<T>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto coeffs = f.coeffs();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const T& c = coeffs[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const T magnitude = negative ? T(-c) : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) out += magnitude.get_str() + "*";
        out += 'x';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

IntPolynomial parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const IntPolynomial& f) { return format_terms(f); }

std::string to_string(const RatPolynomial& f) { return format_terms(f); }

}  // namespace resq
