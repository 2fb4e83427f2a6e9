#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lndlab/groebner.hpp"

namespace lndlab {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finitely presented algebra A = k[x1..xn]/(relations), carrying the reduced
// Groebner basis of its relation ideal. Elements are canonical normal forms.
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    static AlgebraPtr present(RingPtr ring, std::vector<Polynomial> relations,
                              std::string name = "") {
        if (ring->has_invertible()) throw LaurentUnsupported();
        for (const auto& r : relations) {
            if (!same_ring(ring, r.ring())) throw RingMismatch();
            if (r.is_zero()) throw ZeroRelation();
        }
        GroebnerBasis gb =
            relations.empty() ? GroebnerBasis{ring, {}} : groebner(relations);
        return AlgebraPtr(
            new Algebra(std::move(ring), std::move(relations), std::move(gb), std::move(name)));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const GroebnerBasis& gb() const { return gb_; }
    const std::string& name() const { return name_; }
    bool is_polynomial_ring() const { return gb_.gens.empty(); }

    Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb_); }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return same_ring(a.ring_, b.ring_) && a.relations_ == b.relations_;
    }

  private:
    Algebra(RingPtr ring, std::vector<Polynomial> relations, GroebnerBasis gb, std::string name)
        : ring_(std::move(ring)),
          relations_(std::move(relations)),
          gb_(std::move(gb)),
          name_(std::move(name)) {}

    RingPtr ring_;
    std::vector<Polynomial> relations_;
    GroebnerBasis gb_;
    std::string name_;
};

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Element of a presented algebra; the stored representative is always the
// normal form, so element equality is representative equality.
class Element {
  public:
    Element(AlgebraPtr algebra, const Polynomial& lift)
        : algebra_(std::move(algebra)), rep_(algebra_->reduce(lift)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend bool operator==(const Element& a, const Element& b) {
        return same_algebra(a.algebra_, b.algebra_) && a.rep_ == b.rep_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    friend Element operator+(const Element& a, const Element& b) {
        require_same(a, b);
        return Element(a.algebra_, a.rep_ + b.rep_);
    }
    friend Element operator-(const Element& a, const Element& b) {
        require_same(a, b);
        return Element(a.algebra_, a.rep_ - b.rep_);
    }
    friend Element operator*(const Element& a, const Element& b) {
        require_same(a, b);
        return Element(a.algebra_, a.rep_ * b.rep_);
    }
    Element operator-() const { return Element(algebra_, -rep_); }
    Element pow(unsigned e) const { return Element(algebra_, rep_.pow(e)); }
    Element scaled(const Rational& c) const { return Element(algebra_, rep_.scaled(c)); }

    std::string to_string() const { return rep_.to_string(); }

  private:
    static void require_same(const Element& a, const Element& b) {
        if (!same_algebra(a.algebra_, b.algebra_)) throw AlgebraMismatch();
    }

    AlgebraPtr algebra_;
    Polynomial rep_;
};

inline Element elem(const AlgebraPtr& algebra, const Polynomial& f) {
    return Element(algebra, f);
}

inline Element elem(const AlgebraPtr& algebra, const Rational& c) {
    return Element(algebra, Polynomial::constant(algebra->ring(), c));
}

namespace detail {

inline void enumerate_exponents(std::size_t nvars, unsigned budget, Monomial& current,
                                std::size_t at, std::vector<Monomial>& out) {
    if (at == nvars) {
        out.push_back(current);
        return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
        current.set(at, e);
        enumerate_exponents(nvars, budget - e, current, at + 1, out);
    }
    current.set(at, 0);
}

}  // namespace detail

// Monomials of total degree <= N not divisible by any leading monomial of the
// algebra's basis, sorted ascending; a linear basis of the degree-<=N slice.
inline std::vector<Element> std_monomials(const AlgebraPtr& algebra, unsigned N) {
    const RingPtr& ring = algebra->ring();
    std::vector<Monomial> all;
    Monomial scratch(ring->size());
    detail::enumerate_exponents(ring->size(), N, scratch, 0, all);

    std::vector<Monomial> kept;
    for (const auto& m : all) {
        bool divisible = false;
        for (const auto& g : algebra->gb().gens)
            if (g.leading_monomial().divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) {
        return compare(a, b, ring->order()) < 0;
    });

    std::vector<Element> out;
    out.reserve(kept.size());
    for (auto& m : kept)
        out.emplace_back(algebra, Polynomial::from_term(ring, std::move(m), 1));
    return out;
}

}  // namespace lndlab
