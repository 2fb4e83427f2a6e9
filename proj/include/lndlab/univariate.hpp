#pragma once

#include <optional>
#include <vector>

#include "lndlab/polynomial.hpp"

namespace lndlab {

namespace detail {

// Dense ascending coefficient vector of f viewed in one variable.
inline std::vector<Rational> to_dense(const Polynomial& f, std::size_t var) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(f.degree_in(var), 0)) + 1,
                            Rational(0));
    if (f.is_zero()) return {};
    for (const auto& t : f.terms()) c[static_cast<std::size_t>(t.mono.exp(var))] += t.coeff;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

inline Polynomial from_dense(const RingPtr& ring, std::size_t var,
                             const std::vector<Rational>& c) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        Monomial m(ring->size());
        m.set(var, static_cast<std::int64_t>(i));
        terms.push_back({std::move(m), c[i]});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

inline std::vector<Rational> dense_sub_scaled(std::vector<Rational> a,
                                              const std::vector<Rational>& b,
                                              const Rational& s, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i] * s;
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

// (quotient, remainder) of dense division; divisor nonzero.
inline std::pair<std::vector<Rational>, std::vector<Rational>> dense_divmod(
    std::vector<Rational> a, const std::vector<Rational>& b) {
    std::vector<Rational> q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Rational f = a.back() / b.back();
        q[shift] = f;
        a = dense_sub_scaled(std::move(a), b, f, shift);
    }
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    return {std::move(q), std::move(a)};
}

}  // namespace detail

// The single variable both polynomials live in, if any. Constants fit any
// variable; two distinct variables in use is an error.
inline std::optional<std::size_t> common_univariate_variable(const Polynomial& a,
                                                             const Polynomial& b) {
    std::optional<std::size_t> var;
    const RingPtr& ring = a.ring();
    for (std::size_t v = 0; v < ring->size(); ++v) {
        if (!a.uses_variable(v) && !b.uses_variable(v)) continue;
        if (var) throw NotUnivariate("uses '" + ring->var_name(*var) + "' and '" +
                                     ring->var_name(v) + "'");
        var = v;
    }
    return var;
}

struct ExtendedGcd {
    Polynomial g;  // monic gcd
    Polynomial u;  // u*a + v*b = g, exactly
    Polynomial v;
};

// Extended Euclid over Q[t]; both inputs univariate in the same variable and
// not both zero. Result gcd is monic.
inline ExtendedGcd univariate_ext_gcd(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
    if (a.is_zero() && b.is_zero()) throw NotUnivariate("both inputs are zero");
    const RingPtr& ring = a.ring();
    std::size_t var = common_univariate_variable(a, b).value_or(0);

    using Dense = std::vector<Rational>;
    Dense r0 = detail::to_dense(a, var), r1 = detail::to_dense(b, var);
    Dense u0 = {Rational(1)}, u1 = {};
    Dense v0 = {}, v1 = {Rational(1)};

    auto sub_mul = [](const Dense& x, const Dense& q, const Dense& y) {
        // x - q*y
        Dense prod;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            prod = detail::dense_sub_scaled(std::move(prod), y, -q[i], i);
        }
        Dense out = x;
        if (out.size() < prod.size()) out.resize(prod.size(), Rational(0));
        for (std::size_t i = 0; i < prod.size(); ++i) out[i] -= prod[i];
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    };

    while (!r1.empty()) {
        auto [q, r] = detail::dense_divmod(r0, r1);
        Dense u2 = sub_mul(u0, q, u1);
        Dense v2 = sub_mul(v0, q, v1);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }

    Rational lc = r0.back();
    for (auto& c : r0) c /= lc;
    for (auto& c : u0) c /= lc;
    for (auto& c : v0) c /= lc;
    return {detail::from_dense(ring, var, r0), detail::from_dense(ring, var, u0),
            detail::from_dense(ring, var, v0)};
}

}  // namespace lndlab
