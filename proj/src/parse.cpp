#include <cctype>
#include <string>

#include "padisc/error.hpp"
#include "padisc/polynomial.hpp"

namespace padisc {

namespace {

constexpr std::size_t max_exponent = 1'000'000;

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    IntPolynomial parse() {
        skip_space();
        if (at_end()) {
            throw ParseError("empty polynomial", pos_);
        }
        IntPolynomial result = peek() == '[' ? coefficient_list() : sum();
        skip_space();
        if (!at_end()) {
            throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    IntPolynomial sum() {
        IntPolynomial acc = term();
        for (;;) {
            skip_space();
            if (at_end() || peek() == ']') return acc;
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                throw ParseError("expected '+' or '-' but found '" + std::string(1, peek()) + "'", pos_);
            }
        }
    }

    // sign? (integer | integer '*'? var | var)
    IntPolynomial term() {
        skip_space();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_space();
        }
        BigInt coefficient = 1;
        bool has_integer = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = digits();
            has_integer = true;
        }
        if (negative) coefficient = -coefficient;

        const bool star = has_integer && accept('*');
        skip_space();
        if (peek() == 'x') {
            ++pos_;
            return IntPolynomial::monomial(coefficient, exponent());
        }
        if (star || !has_integer) {
            throw ParseError(at_end() ? "unexpected end of input, expected 'x'"
                                      : "expected 'x' but found '" + std::string(1, peek()) + "'",
                             pos_);
        }
        return IntPolynomial::constant(coefficient);
    }

    std::size_t exponent() {
        if (!accept('^')) return 1;
        skip_space();
        const std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected a natural exponent after '^'", pos_);
        }
        const BigInt e = digits();
        if (e > max_exponent) {
            throw ParseError("exponent too large", start);
        }
        return e.get_ui();
    }

    BigInt digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    // "[a_k, ..., a_0]"
    IntPolynomial coefficient_list() {
        ++pos_;
        std::vector<BigInt> descending;
        skip_space();
        if (accept(']')) return {};
        do {
            skip_space();
            bool negative = false;
            if (peek() == '-' || peek() == '+') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("expected an integer coefficient", pos_);
            }
            BigInt value = digits();
            descending.push_back(negative ? BigInt(-value) : value);
        } while (accept(','));
        if (!accept(']')) {
            throw ParseError("expected ',' or ']'", pos_);
        }
        return IntPolynomial(std::vector<BigInt>(descending.rbegin(), descending.rend()));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace padisc
