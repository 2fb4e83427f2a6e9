#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lndlab/algebra.hpp"

namespace lndlab {

// Degree of an element under iterated application of a derivation:
// a natural number, -infinity (for zero), or indeterminate when no power
// vanished within the bound.
struct DegResult {
    enum class Kind { finite, neg_infinity, indeterminate };
    Kind kind;
    unsigned value = 0;

    static DegResult finite(unsigned n) { return {Kind::finite, n}; }
    static DegResult neg_infinity() { return {Kind::neg_infinity, 0}; }
    static DegResult indeterminate() { return {Kind::indeterminate, 0}; }

    bool is_finite() const { return kind == Kind::finite; }

    std::string to_string() const {
        switch (kind) {
            case Kind::finite:
                return std::to_string(value);
            case Kind::neg_infinity:
                return "neg-infinity";
            default:
                return "indeterminate";
        }
    }

    friend bool operator==(const DegResult& a, const DegResult& b) {
        return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
    }
};

// Per-generator chains [Dx, D^2 x, ..., 0]; every chain ends in zero, which
// certifies local nilpotency since the nilpotent elements form a subalgebra
// containing the generators.
struct NilpotencyCertificate {
    std::vector<std::pair<std::string, std::vector<Element>>> chains;
    unsigned bound_used = 0;
};

// Derivation on a presented algebra, defined by generator images and extended
// to every element through the Leibniz rule. Construction validates ideal
// stability, so the action is independent of the chosen representative.
class Derivation {
  public:
    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Element>& images() const { return images_; }
    const Element& image(std::size_t var) const { return images_[var]; }
    const std::string& label() const { return label_; }

    bool is_zero() const {
        for (const auto& im : images_)
            if (!im.is_zero()) return false;
        return true;
    }

    // D(f) for a polynomial lift: sum over generators of df/dx_i * D(x_i).
    Polynomial apply_to_lift(const Polynomial& f) const {
        Polynomial acc(algebra_->ring());
        for (std::size_t v = 0; v < algebra_->ring()->size(); ++v) {
            if (images_[v].is_zero()) continue;
            acc = acc + f.derivative(v) * images_[v].rep();
        }
        return acc;
    }

    Element apply(const Element& a) const {
        if (!same_algebra(algebra_, a.algebra())) throw AlgebraMismatch();
        return Element(algebra_, apply_to_lift(a.rep()));
    }

    std::string table_string() const {
        std::string out;
        for (std::size_t v = 0; v < algebra_->ring()->size(); ++v) {
            if (!out.empty()) out += ", ";
            out += algebra_->ring()->var_name(v) + " -> " + images_[v].to_string();
        }
        return out;
    }

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return same_algebra(a.algebra_, b.algebra_) && a.images_ == b.images_;
    }

    friend Derivation define_derivation(const AlgebraPtr&,
                                        const std::map<std::string, Polynomial>&,
                                        std::string);

  private:
    Derivation(AlgebraPtr algebra, std::vector<Element> images, std::string label)
        : algebra_(std::move(algebra)), images_(std::move(images)), label_(std::move(label)) {}

    AlgebraPtr algebra_;
    std::vector<Element> images_;
    std::string label_;
};

// Builds a derivation from generator images (missing generators default to
// zero). Fails with the offending relation and its nonzero residue when some
// relation is not carried into the ideal.
inline Derivation define_derivation(const AlgebraPtr& algebra,
                                    const std::map<std::string, Polynomial>& images,
                                    std::string label = "") {
    const RingPtr& ring = algebra->ring();
    std::vector<Element> elems;
    elems.reserve(ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v) {
        auto it = images.find(ring->var_name(v));
        if (it == images.end()) {
            elems.emplace_back(algebra, Polynomial::zero(ring));
        } else {
            if (!same_ring(ring, it->second.ring())) throw RingMismatch();
            elems.emplace_back(algebra, it->second);
        }
    }
    Derivation d(algebra, std::move(elems), std::move(label));
    for (const auto& g : algebra->relations()) {
        Polynomial stability = algebra->reduce(d.apply_to_lift(g));
        if (!stability.is_zero())
            throw WellDefinednessError(g.to_string(), stability.to_string());
    }
    return d;
}

// Largest n <= bound with D^n(a) != 0 once a vanishing power appears within
// the bound; -infinity for a = 0; indeterminate otherwise.
inline DegResult deg_d(const Derivation& D, const Element& a, unsigned bound) {
    if (a.is_zero()) return DegResult::neg_infinity();
    Element cur = a;
    for (unsigned n = 1; n <= bound; ++n) {
        cur = D.apply(cur);
        if (cur.is_zero()) return DegResult::finite(n - 1);
    }
    return DegResult::indeterminate();
}

// Size caps on chain entries; a chain that outgrows them is treated exactly
// like one that outruns the bound. Searches pass tight caps so runaway
// candidates fail fast.
struct CertifyLimits {
    std::int64_t degree_cap = 512;
    std::size_t term_cap = 4096;
};

// Iterates D on every generator; a certificate is returned only when every
// chain reaches zero within the bound. Exhaustion -- of the bound or of the
// size caps -- never claims "not locally nilpotent"; it is reported as
// nullopt (indeterminate).
inline std::optional<NilpotencyCertificate> certify_lnd(const Derivation& D,
                                                        unsigned bound = 64,
                                                        CertifyLimits limits = {}) {
    NilpotencyCertificate cert;
    cert.bound_used = bound;
    const RingPtr& ring = D.algebra()->ring();
    for (std::size_t v = 0; v < ring->size(); ++v) {
        std::vector<Element> chain;
        Element cur = D.image(v);
        chain.push_back(cur);
        unsigned steps = 1;
        while (!cur.is_zero()) {
            if (steps == bound) return std::nullopt;
            if (cur.rep().total_degree() > limits.degree_cap ||
                cur.rep().terms().size() > limits.term_cap)
                return std::nullopt;
            cur = D.apply(cur);
            chain.push_back(cur);
            ++steps;
        }
        cert.chains.emplace_back(ring->var_name(v), std::move(chain));
    }
    return cert;
}

inline bool in_kernel(const Derivation& D, const Element& a) { return D.apply(a).is_zero(); }

}  // namespace lndlab
