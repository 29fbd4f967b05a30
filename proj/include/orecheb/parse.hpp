#ifndef ORECHEB_PARSE_HPP
#define ORECHEB_PARSE_HPP

#include <cctype>
#include <string>

#include "orecheb/ore.hpp"

namespace orecheb {

/// Syntax error with the 0-based position in the input text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    size_t position() const { return pos_; }

  private:
    size_t pos_;
};

namespace detail {

/// Recursive-descent parser for differential-operator expressions:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | power
///   power  := atom ('^' uint)*
///   atom   := number | 'x' | 'Dx' | '(' expr ')'
///   number := uint ('/' uint)?
/// Products are non-commutative (Dx*x != x*Dx); juxtaposition is not
/// allowed.
class OperatorParser {
  public:
    explicit OperatorParser(const std::string& s) : s_(s) {}

    DiffOp parse() {
        DiffOp r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return r;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    DiffOp expr() {
        DiffOp r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    DiffOp term() {
        DiffOp r = factor();
        while (eat('*')) r *= factor();
        return r;
    }

    DiffOp factor() {
        if (eat('-')) return -factor();
        return power();
    }

    DiffOp power() {
        DiffOp base = atom();
        while (eat('^')) {
            skip_ws();
            size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected nonnegative integer exponent", at);
            unsigned long e = read_uint();
            DiffOp r = DiffOp::one();
            for (unsigned long i = 0; i < e; ++i) r *= base;
            base = r;
        }
        return base;
    }

    DiffOp atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            DiffOp r = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(read_uint_str());
            if (eat('/')) {
                skip_ws();
                size_t at = pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected integer denominator", at);
                mpz_class den(read_uint_str());
                if (den == 0) throw ParseError("zero denominator", at);
                return DiffOp(RatFunc(BigRat(num, den)));
            }
            return DiffOp(RatFunc(BigRat(num)));
        }
        if (s_.compare(pos_, 2, "Dx") == 0) {
            pos_ += 2;
            return DiffOp::monomial(RatFunc(1), 1);
        }
        if (c == 'x') {
            ++pos_;
            return DiffOp(RatFunc(Poly::variable()));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string read_uint_str() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    unsigned long read_uint() { return std::stoul(read_uint_str()); }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline DiffOp parse_operator(const std::string& text) {
    return detail::OperatorParser(text).parse();
}

}  // namespace orecheb

#endif  // ORECHEB_PARSE_HPP
