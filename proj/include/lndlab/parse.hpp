#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "lndlab/polynomial.hpp"

namespace lndlab {

// Recursive-descent parser for the polynomial grammar:
//
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' int]
//   base     := rational | ident | '(' expr ')'
//   rational := int ['/' posint]
//   ident    := letter (letter|digit|'_')*
//
// Whitespace is insignificant, there is no implicit multiplication, and a
// negative exponent is legal only directly on an invertible variable.
class PolyParser {
  public:
    PolyParser(std::string_view text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial f = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input or operator");
        return f;
    }

  private:
    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    enum class BaseKind { number, variable, group };

    Polynomial factor() {
        skip_ws();
        std::size_t base_pos = pos_;
        BaseKind kind = BaseKind::number;
        std::size_t var_idx = 0;
        Polynomial base = parse_base(kind, var_idx);
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        std::int64_t e = parse_int();
        if (e >= 0) return base.pow(static_cast<unsigned>(e));
        if (kind != BaseKind::variable || !ring_->is_invertible(var_idx))
            throw NegativePowerOfNonInvertible(std::string(text_.substr(base_pos, 24)));
        Monomial m(ring_->size());
        m.set(var_idx, e);
        return Polynomial::from_term(ring_, std::move(m), 1);
    }

    Polynomial parse_base(BaseKind& kind, std::size_t& var_idx) {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError(pos_, "')'");
            ++pos_;
            kind = BaseKind::group;
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx) throw UnknownVariable(name);
            kind = BaseKind::variable;
            var_idx = *idx;
            return Polynomial::variable(ring_, *idx);
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            kind = BaseKind::number;
            return Polynomial::constant(ring_, parse_rational());
        }
        throw SyntaxError(pos_, "number, variable, or '('");
    }

    Rational parse_rational() {
        mpz_class num(parse_digits(true));
        skip_ws();
        if (peek() != '/') return Rational(mpq_class(num));
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        mpz_class den(parse_digits(false));
        if (den == 0) throw SyntaxError(den_pos, "positive integer");
        return Rational(num, den);
    }

    std::int64_t parse_int() {
        skip_ws();
        std::string digits = parse_digits(true);
        mpz_class v(digits);
        if (v >= Monomial::kExpLimit || v <= -Monomial::kExpLimit) throw ExponentOverflow();
        return v.get_si();
    }

    std::string parse_digits(bool allow_sign) {
        skip_ws();
        std::string out;
        if (allow_sign && peek() == '-') {
            out += '-';
            ++pos_;
            skip_ws();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError(pos_, "integer");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out += text_[pos_++];
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
    return PolyParser(text, ring).parse();
}

}  // namespace lndlab
