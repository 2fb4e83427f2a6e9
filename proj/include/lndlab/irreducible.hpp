#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lndlab/univariate.hpp"

namespace lndlab {

// Three-valued irreducibility verdict over the rationals. Reducible always
// carries an exact witness factor; Irreducible is only emitted with a sound
// certificate (degree argument or irreducibility modulo a listed prime).
struct IrreducibilityVerdict {
    enum class Kind { irreducible, reducible, indeterminate };
    Kind kind;
    std::optional<Polynomial> witness;   // exact factor, for reducible
    std::vector<unsigned> primes_tried;  // for indeterminate
    unsigned certificate_prime = 0;      // 0 = degree argument

    bool is_irreducible() const { return kind == Kind::irreducible; }
    bool is_reducible() const { return kind == Kind::reducible; }
    bool is_indeterminate() const { return kind == Kind::indeterminate; }

    std::string to_string() const {
        switch (kind) {
            case Kind::irreducible:
                return "irreducible";
            case Kind::reducible:
                return "reducible: " + witness->to_string();
            default:
                return "indeterminate";
        }
    }
};

namespace detail {

inline const std::vector<unsigned>& default_prime_list() {
    static const std::vector<unsigned> primes = {2,  3,  5,  7,  11, 13, 17,
                                                 19, 23, 29, 31, 37, 41, 43, 47};
    return primes;
}

// Positive divisors of |n| by trial division; empty when |n| is too large to
// factor cheaply (callers fall back to the modular test).
inline std::vector<mpz_class> small_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    std::vector<mpz_class> divs;
    if (a == 0 || a > 1000000000) return divs;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            if (d * d != a) divs.push_back(a / d);
        }
    }
    return divs;
}

// --- dense arithmetic over F_p, p < 2^31 ---------------------------------

using FpPoly = std::vector<std::uint64_t>;  // ascending coefficients, trimmed

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_mod(const FpPoly& a, const FpPoly& m, std::uint64_t p) {
    FpPoly r = a;
    fp_trim(r);
    std::uint64_t lead_inv = 0;
    {
        // Fermat inverse of the (monic-ized) divisor's leading coefficient.
        std::uint64_t base = m.back() % p, e = p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = acc;
    }
    while (r.size() >= m.size()) {
        std::uint64_t f = r.back() % p * lead_inv % p;
        std::size_t shift = r.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = f * (m[i] % p) % p;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        fp_trim(r);
    }
    return r;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return fp_mod(prod, m, p);
}

inline FpPoly fp_powmod(FpPoly base, mpz_class e, const FpPoly& m, std::uint64_t p) {
    FpPoly acc = {1};
    base = fp_mod(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = fp_mulmod(acc, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f irreducible over F_p iff x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1
// for every prime divisor q of n.
inline bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    FpPoly x = {0, 1};

    mpz_class pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, static_cast<unsigned long>(n));
    FpPoly xpn = fp_powmod(x, pn, f, p);
    FpPoly diff = xpn;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(diff);
    if (!diff.empty()) return false;

    for (std::size_t q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool q_prime = true;
        for (std::size_t d = 2; d * d <= q; ++d)
            if (q % d == 0) q_prime = false;
        if (!q_prime) continue;
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(n / q));
        FpPoly xq = fp_powmod(x, pk, f, p);
        FpPoly d = xq;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        fp_trim(d);
        FpPoly g = fp_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

// Sound heuristic irreducibility test for univariate rational polynomials:
// rational-root search gives Reducible with a witness; degree <= 3 without a
// rational root, or irreducibility modulo a small prime, certifies
// Irreducible; everything else is Indeterminate.
inline IrreducibilityVerdict irreducible_q(
    const Polynomial& p, const std::vector<unsigned>& primes = detail::default_prime_list()) {
    std::optional<std::size_t> var_opt = common_univariate_variable(p, p);
    if (!var_opt) throw ConstantInput();
    std::size_t var = *var_opt;
    std::vector<Rational> dense = detail::to_dense(p, var);
    std::size_t deg = dense.size() - 1;
    if (deg == 0) throw ConstantInput();
    if (deg == 1) return {IrreducibilityVerdict::Kind::irreducible, {}, {}, 0};

    const RingPtr& ring = p.ring();
    auto linear_factor = [&](const Rational& root) {
        // t - root, scaled to integer coefficients when possible kept monic.
        return Polynomial::variable(ring, var) - Polynomial::constant(ring, root);
    };

    // Clear denominators: primitive integer coefficient vector.
    mpz_class den_lcm = 1;
    for (const auto& c : dense) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = den_lcm / g * c.den();
    }
    std::vector<mpz_class> zc(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i)
        zc[i] = dense[i].num() * (den_lcm / dense[i].den());
    mpz_class content = 0;
    for (const auto& c : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : zc) c /= content;

    // Rational root test: roots r/s with r | constant term, s | leading term.
    if (zc.front() == 0) {
        Polynomial w = Polynomial::variable(ring, var);
        return {IrreducibilityVerdict::Kind::reducible, w, {}, 0};
    }
    auto eval = [&](const Rational& x) {
        Rational acc(0);
        for (std::size_t i = zc.size(); i-- > 0;)
            acc = acc * x + Rational(zc[i], mpz_class(1));
        return acc;
    };
    std::vector<mpz_class> rs = detail::small_divisors(zc.front());
    std::vector<mpz_class> ss = detail::small_divisors(zc.back());
    for (const auto& r : rs)
        for (const auto& s : ss) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign > 0 ? r : mpz_class(-r), s);
                if (eval(cand).is_zero())
                    return {IrreducibilityVerdict::Kind::reducible, linear_factor(cand), {}, 0};
            }
        }

    if (deg <= 3) return {IrreducibilityVerdict::Kind::irreducible, {}, {}, 0};

    // Modular certificate: irreducible mod p for a prime not dividing the
    // leading coefficient implies irreducible over Q.
    std::vector<unsigned> tried;
    for (unsigned prime : primes) {
        if (zc.back() % prime == 0) continue;
        tried.push_back(prime);
        detail::FpPoly fp(zc.size());
        for (std::size_t i = 0; i < zc.size(); ++i) {
            mpz_class m = zc[i] % prime;
            if (m < 0) m += prime;
            fp[i] = m.get_ui();
        }
        if (detail::fp_irreducible(fp, prime))
            return {IrreducibilityVerdict::Kind::irreducible, {}, {}, prime};
    }
    return {IrreducibilityVerdict::Kind::indeterminate, {}, tried, 0};
}

}  // namespace lndlab
