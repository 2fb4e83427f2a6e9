#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lndlab/rational.hpp"
#include "lndlab/ring.hpp"

namespace lndlab {

// Sparse exact-rational multivariate polynomial in canonical form: terms are
// kept strictly descending under the ring's monomial order and never carry a
// zero coefficient, so equality is plain term-list equality.
class Polynomial {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term& a, const Term& b) {
            return a.mono == b.mono && a.coeff == b.coeff;
        }
    };

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, Rational c) {
        Polynomial f(std::move(ring));
        if (!c.is_zero()) f.terms_.push_back({Monomial(f.ring_->size()), std::move(c)});
        return f;
    }

    static Polynomial variable(const RingPtr& ring, std::size_t idx) {
        Monomial m(ring->size());
        m.set(idx, 1);
        return from_term(ring, std::move(m), 1);
    }

    static Polynomial variable(const RingPtr& ring, const std::string& name) {
        return variable(ring, ring->require_index(name));
    }

    static Polynomial from_term(RingPtr ring, Monomial m, Rational c) {
        Polynomial f(std::move(ring));
        if (!c.is_zero()) {
            check_monomial(*f.ring_, m);
            f.terms_.push_back({std::move(m), std::move(c)});
        }
        return f;
    }

    // Terms may arrive in any order; they are sorted and merged here.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial f(std::move(ring));
        std::map<Monomial, Rational, MonomialDescending> acc{
            MonomialDescending{f.ring_->order()}};
        for (auto& t : terms) {
            check_monomial(*f.ring_, t.mono);
            auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) f.terms_.push_back({m, c});
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
    }
    Rational constant_value() const {
        return terms_.empty() ? Rational(0) : terms_[0].coeff;
    }

    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    // Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    // Largest exponent of one variable; -1 if the variable is absent.
    std::int64_t degree_in(std::size_t var) const {
        std::int64_t d = -1;
        for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.mono.exp(var));
        return is_zero() ? -1 : d;
    }

    bool uses_variable(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.mono.exp(var) != 0) return true;
        return false;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a, b);
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        const auto order = a.ring_->order();
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = compare(a.terms_[i].mono, b.terms_[j].mono, order);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a, b);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        std::map<Monomial, Rational, MonomialDescending> acc{
            MonomialDescending{a.ring_->order()}};
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono.times(tb.mono);
                Rational c = ta.coeff * tb.coeff;
                auto [it, fresh] = acc.emplace(std::move(m), std::move(c));
                if (!fresh) it->second += ta.coeff * tb.coeff;
            }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, c});
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        unsigned k = e;
        while (k > 0) {
            if (k & 1u) r = r * base;
            k >>= 1u;
            if (k > 0) base = base * base;
        }
        return r;
    }

    // Formal partial derivative. The variable must not be invertible.
    Polynomial derivative(std::size_t var) const {
        if (var >= ring_->size()) throw UnknownVariable("#" + std::to_string(var));
        if (ring_->is_invertible(var)) throw InvertibleVariable(ring_->var_name(var));
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            std::int32_t e = t.mono.exp(var);
            if (e == 0) continue;
            Monomial m = t.mono;
            m.set(var, std::int64_t{e} - 1);
            r.terms_.push_back({std::move(m), t.coeff * Rational(e)});
        }
        // Dropping one exponent preserves relative order for lex and grevlex,
        // so the term list is still sorted and nonzero throughout.
        return r;
    }

    Polynomial derivative(const std::string& var) const {
        return derivative(ring_->require_index(var));
    }

    // Simultaneous substitution; variables absent from the map stay fixed.
    // Images of invertible variables must be syntactic units: one term whose
    // monomial uses invertible variables only.
    Polynomial substitute(const std::map<std::size_t, Polynomial>& images) const {
        for (const auto& [v, img] : images) {
            if (v >= ring_->size()) throw UnknownVariable("#" + std::to_string(v));
            if (!same_ring(ring_, img.ring())) throw RingMismatch();
            if (ring_->is_invertible(v) && !is_syntactic_unit(img))
                throw NonUnitImageForInvertible(ring_->var_name(v));
        }
        Polynomial result(ring_);
        for (const auto& t : terms_) {
            Monomial untouched(ring_->size());
            Polynomial factor = constant(ring_, t.coeff);
            for (std::size_t v = 0; v < ring_->size(); ++v) {
                std::int32_t e = t.mono.exp(v);
                if (e == 0) continue;
                auto it = images.find(v);
                if (it == images.end()) {
                    untouched.set(v, e);
                    continue;
                }
                factor = factor * power_of_image(it->second, e);
            }
            result = result + factor * from_term(ring_, std::move(untouched), 1);
        }
        return result;
    }

    Polynomial substitute(const std::map<std::string, Polynomial>& images) const {
        std::map<std::size_t, Polynomial> by_index;
        for (const auto& [name, img] : images)
            by_index.emplace(ring_->require_index(name), img);
        return substitute(by_index);
    }

    // Canonical text form; parseable by the polynomial grammar.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            Rational c = t.coeff;
            if (i == 0) {
                if (c.sign() < 0) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += c.sign() < 0 ? " - " : " + ";
                if (c.sign() < 0) c = -c;
            }
            out += term_string(t.mono, c);
        }
        return out;
    }

  private:
    static void require_same_ring(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
    }

    static void check_monomial(const RingDesc& ring, const Monomial& m) {
        if (m.size() != ring.size()) throw RingMismatch("monomial width");
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.exp(i) < 0 && !ring.is_invertible(i))
                throw NegativePowerOfNonInvertible(ring.var_name(i));
    }

    bool is_syntactic_unit(const Polynomial& f) const {
        if (f.terms_.size() != 1) return false;
        const Monomial& m = f.terms_[0].mono;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.exp(i) != 0 && !ring_->is_invertible(i)) return false;
        return true;
    }

    Polynomial power_of_image(const Polynomial& img, std::int32_t e) const {
        if (e >= 0) return img.pow(static_cast<unsigned>(e));
        // Negative power of a unit: invert the single term, then raise.
        const Term& t = img.terms_[0];
        Polynomial inv = from_term(ring_, t.mono.pow(-1), t.coeff.inverse());
        return inv.pow(static_cast<unsigned>(-e));
    }

    std::string term_string(const Monomial& m, const Rational& abs_coeff) const {
        std::string mono;
        for (std::size_t v = 0; v < m.size(); ++v) {
            std::int32_t e = m.exp(v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(v);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) return abs_coeff.to_string();
        if (abs_coeff.is_one()) return mono;
        return abs_coeff.to_string() + "*" + mono;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

// Re-expresses f over another ring that contains all of f's variables by
// name; used to embed relations into extended rings.
inline Polynomial transported(const Polynomial& f, const RingPtr& target) {
    const RingPtr& src = f.ring();
    std::vector<std::size_t> where(src->size());
    for (std::size_t v = 0; v < src->size(); ++v)
        where[v] = target->require_index(src->var_name(v));
    std::vector<Polynomial::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m(target->size());
        for (std::size_t v = 0; v < src->size(); ++v) m.set(where[v], t.mono.exp(v));
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace lndlab
