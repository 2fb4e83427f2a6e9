#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "lndlab/polynomial.hpp"

namespace lndlab {

// Reduced Groebner basis of an ideal: generators monic, no generator's leading
// monomial divides a monomial of another generator, sorted ascending by
// leading monomial. Unique for a given ideal and order, so equality of bases
// is equality of ideals.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> gens;

    MonomialOrder order() const { return ring->order(); }
};

namespace detail {

// Full reduction of f modulo divisors (not necessarily a Groebner basis):
// every term of the result is divisible by no divisor's leading monomial.
inline Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& divisors) {
    Polynomial remainder(f.ring());
    while (!f.is_zero()) {
        const Monomial& lm = f.leading_monomial();
        const Polynomial* hit = nullptr;
        for (const auto& g : divisors) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                hit = &g;
                break;
            }
        }
        if (hit == nullptr) {
            Polynomial lt = Polynomial::from_term(f.ring(), lm, f.leading_coeff());
            remainder = remainder + lt;
            f = f - lt;
            continue;
        }
        Monomial q = lm.divided_by(hit->leading_monomial());
        Rational c = f.leading_coeff() / hit->leading_coeff();
        f = f - *hit * Polynomial::from_term(f.ring(), std::move(q), std::move(c));
    }
    return remainder;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial mf = Polynomial::from_term(f.ring(), l.divided_by(f.leading_monomial()),
                                          f.leading_coeff().inverse());
    Polynomial mg = Polynomial::from_term(g.ring(), l.divided_by(g.leading_monomial()),
                                          g.leading_coeff().inverse());
    return f * mf - g * mg;
}

}  // namespace detail

// Buchberger with the coprime-leading-monomial criterion and normal pair
// selection (smallest lcm first). Input generators may arrive in any order;
// the reduced basis is canonical, so the output does not depend on it.
inline GroebnerBasis groebner(const std::vector<Polynomial>& generators) {
    if (generators.empty()) throw InvalidSpec("groebner needs at least one generator");
    RingPtr ring = generators.front().ring();
    if (ring->has_invertible()) throw LaurentUnsupported();
    const MonomialOrder order = ring->order();

    std::vector<Polynomial> basis;
    for (const auto& g : generators) {
        if (!same_ring(ring, g.ring())) throw RingMismatch();
        if (!g.is_zero()) basis.push_back(g.scaled(g.leading_coeff().inverse()));
    }
    if (basis.empty()) return {ring, {}};

    // Deterministic starting point regardless of input order.
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) pending.insert({i, upto});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!pending.empty()) {
        // Normal selection: smallest lcm of leading monomials.
        auto best = pending.begin();
        Monomial best_lcm = Monomial::lcm(basis[best->first].leading_monomial(),
                                          basis[best->second].leading_monomial());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(basis[it->first].leading_monomial(),
                                       basis[it->second].leading_monomial());
            if (compare(l, best_lcm, order) < 0) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        const Monomial& lmi = basis[i].leading_monomial();
        const Monomial& lmj = basis[j].leading_monomial();
        if (best_lcm == lmi.times(lmj)) continue;  // coprime leading monomials

        Polynomial r = detail::reduce_full(detail::s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.scaled(r.leading_coeff().inverse()));
        push_pairs(basis.size() - 1);
    }

    // Minimalize: drop generators whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                // Break ties between equal leading monomials by keeping one.
                redundant = basis[i].leading_monomial() != basis[j].leading_monomial() || j < i;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each generator against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = detail::reduce_full(minimal[i], others);
        reduced.push_back(r.scaled(r.leading_coeff().inverse()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
    });
    return {ring, std::move(reduced)};
}

// Unique remainder of f modulo the basis; linear in f and idempotent.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!same_ring(f.ring(), gb.ring)) throw RingMismatch();
    if (gb.gens.empty()) return f;
    return detail::reduce_full(f, gb.gens);
}

inline bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

}  // namespace lndlab
