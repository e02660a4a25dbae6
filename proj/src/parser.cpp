#include <cctype>

#include "dsp/scalar.hpp"

namespace dsp {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Scalar run() {
        skip_ws();
        Scalar v = expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError("unexpected input", pos_);
        return v;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) return v;
            char op = src_[pos_++];
            Scalar rhs = term();
            v = (op == '+') ? v + rhs : v - rhs;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            skip_ws();
            if (eof() || (peek() != '*' && peek() != '/')) return v;
            char op = src_[pos_++];
            std::size_t at = pos_;
            Scalar rhs = factor();
            if (op == '*') {
                v = v * rhs;
            } else {
                if (rhs.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                v = v / rhs;
            }
        }
    }

    Scalar factor() {
        skip_ws();
        if (eof()) throw SyntaxError("unexpected end of input", pos_);
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            skip_ws();
            if (eof() || peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer();
        if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Scalar integer() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        mpz_class z(std::string(src_.substr(start, pos_ - start)), 10);
        return Scalar(Rational(z));
    }

    Scalar symbol() {
        std::size_t start = pos_;
        ++pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        return Scalar::variable(src_.substr(start, pos_ - start));
    }
};

}  // namespace

Scalar parse_scalar(std::string_view src) {
    return Parser(src).run();
}

}  // namespace dsp
