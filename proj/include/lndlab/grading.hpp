#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lndlab/derivation.hpp"
#include "lndlab/lattice.hpp"

namespace lndlab {

// Z^d-grading of a (possibly Laurent) ring: one degree vector per variable,
// compared lexicographically. Degrees of general polynomials are filtration
// degrees, i.e. the lex-max over the monomials.
class Grading {
  public:
    Grading(RingPtr ring, std::size_t dim, std::vector<DegVec> degrees)
        : ring_(std::move(ring)), dim_(dim), degrees_(std::move(degrees)) {
        if (degrees_.size() != ring_->size())
            throw InvalidSpec("grading must assign a degree to every variable");
        for (const auto& d : degrees_)
            if (d.size() != dim_) throw DimensionMismatch();
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t dim() const { return dim_; }
    const DegVec& degree_of_var(std::size_t v) const { return degrees_[v]; }
    const std::vector<DegVec>& degrees() const { return degrees_; }

    DegVec degree_of_monomial(const Monomial& m) const {
        DegVec acc(dim_, 0);
        for (std::size_t v = 0; v < m.size(); ++v) {
            std::int64_t e = m.exp(v);
            if (e == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) acc[j] += e * degrees_[v][j];
        }
        return acc;
    }

  private:
    RingPtr ring_;
    std::size_t dim_;
    std::vector<DegVec> degrees_;
};

// Lex-max of the monomial degrees; nullopt encodes -infinity (zero input).
inline std::optional<DegVec> deg_g(const Polynomial& f, const Grading& gr) {
    if (!same_ring(f.ring(), gr.ring())) throw RingMismatch();
    std::optional<DegVec> best;
    for (const auto& t : f.terms()) {
        DegVec d = gr.degree_of_monomial(t.mono);
        if (!best || degvec_compare(d, *best) > 0) best = std::move(d);
    }
    return best;
}

inline bool is_homogeneous(const Polynomial& f, const Grading& gr) {
    if (!same_ring(f.ring(), gr.ring())) throw RingMismatch();
    std::optional<DegVec> seen;
    for (const auto& t : f.terms()) {
        DegVec d = gr.degree_of_monomial(t.mono);
        if (seen && *seen != d) return false;
        if (!seen) seen = std::move(d);
    }
    return true;
}

// Sum of the monomials attaining deg_g(f); 0 maps to 0 and a homogeneous
// polynomial to itself.
inline Polynomial top_summand(const Polynomial& f, const Grading& gr) {
    std::optional<DegVec> top = deg_g(f, gr);
    if (!top) return Polynomial::zero(f.ring());
    std::vector<Polynomial::Term> kept;
    for (const auto& t : f.terms())
        if (gr.degree_of_monomial(t.mono) == *top) kept.push_back(t);
    return Polynomial::from_terms(f.ring(), std::move(kept));
}

// Degree of a derivation: lex-max over generators with nonzero image of
// deg(Dx) - deg(x). The generator max bounds the gap deg(Df) - deg(f) for
// every f extended by the Leibniz rule.
inline DegVec deg_g_derivation(const Derivation& D, const Grading& gr) {
    if (!same_ring(D.algebra()->ring(), gr.ring())) throw RingMismatch();
    std::optional<DegVec> best;
    for (std::size_t v = 0; v < gr.ring()->size(); ++v) {
        const Element& im = D.image(v);
        if (im.is_zero()) continue;
        DegVec gap = *deg_g(im.rep(), gr);
        const DegVec& dv = gr.degree_of_var(v);
        for (std::size_t j = 0; j < gap.size(); ++j) gap[j] -= dv[j];
        if (!best || degvec_compare(gap, *best) > 0) best = std::move(gap);
    }
    if (!best) throw ZeroDerivation();
    return *best;
}

// Induced derivation table: a generator keeps the top summand of its image
// exactly where the degree gap attains deg_G D, and is sent to zero elsewhere.
// Represented over the ambient ring rather than a presented associated-graded
// algebra; the table evaluates through the Leibniz rule.
struct InducedDerivation {
    RingPtr ring;
    std::vector<Polynomial> images;
    DegVec degree;  // equals the degree of the inducing derivation

    std::string table_string() const {
        std::string out;
        for (std::size_t v = 0; v < ring->size(); ++v) {
            if (!out.empty()) out += ", ";
            out += ring->var_name(v) + " -> " + images[v].to_string();
        }
        return out;
    }
};

inline InducedDerivation induced_derivation(const Derivation& D, const Grading& gr) {
    DegVec top_gap = deg_g_derivation(D, gr);
    const RingPtr& ring = gr.ring();
    std::vector<Polynomial> images;
    images.reserve(ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v) {
        const Element& im = D.image(v);
        if (im.is_zero()) {
            images.push_back(Polynomial::zero(ring));
            continue;
        }
        DegVec gap = *deg_g(im.rep(), gr);
        const DegVec& dv = gr.degree_of_var(v);
        for (std::size_t j = 0; j < gap.size(); ++j) gap[j] -= dv[j];
        images.push_back(degvec_compare(gap, top_gap) == 0 ? top_summand(im.rep(), gr)
                                                           : Polynomial::zero(ring));
    }
    return {ring, std::move(images), std::move(top_gap)};
}

// Formal application of an induced table to a polynomial over the ambient
// ring (no quotient reduction).
inline Polynomial evaluate_table(const InducedDerivation& table, const Polynomial& f) {
    if (!same_ring(f.ring(), table.ring)) throw RingMismatch();
    Polynomial acc(table.ring);
    for (std::size_t v = 0; v < table.ring->size(); ++v) {
        if (table.images[v].is_zero()) continue;
        acc = acc + f.derivative(v) * table.images[v];
    }
    return acc;
}

// Groebner basis of the ideal spanned by the top summands of the algebra's
// relations -- the associated-graded relation ideal when the relation ideal
// is principal, which covers every algebra this library constructs.
inline GroebnerBasis top_relations_gb(const AlgebraPtr& algebra, const Grading& gr) {
    if (algebra->relations().empty()) return GroebnerBasis{algebra->ring(), {}};
    std::vector<Polynomial> tops;
    tops.reserve(algebra->relations().size());
    for (const auto& r : algebra->relations()) tops.push_back(top_summand(r, gr));
    return groebner(tops);
}

}  // namespace lndlab
