#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "lndlab/derivation.hpp"
#include "lndlab/linalg.hpp"

namespace lndlab {

// Exact matrix of a derivation from the degree-<=N slice into the slice large
// enough to hold every image; column j is D(domain[j]) in codomain
// coordinates.
struct LinearMap {
    std::vector<Element> domain;    // std_monomials(A, N)
    std::vector<Element> codomain;  // std_monomials(A, N + jump)
    QMatrix matrix;                 // codomain.size() rows, domain.size() cols
    unsigned jump = 0;
};

namespace detail {

inline QVector coordinates(const Polynomial& f,
                           const std::map<Monomial, std::size_t, MonomialDescending>& index,
                           std::size_t size) {
    QVector v(size, Rational(0));
    for (const auto& t : f.terms()) {
        auto it = index.find(t.mono);
        if (it == index.end())
            throw InvalidSpec("monomial outside the slice: " + f.to_string());
        v[it->second] = t.coeff;
    }
    return v;
}

inline std::map<Monomial, std::size_t, MonomialDescending> index_of(
    const std::vector<Element>& basis, MonomialOrder order) {
    std::map<Monomial, std::size_t, MonomialDescending> index{MonomialDescending{order}};
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i].rep().leading_monomial(), i);
    return index;
}

}  // namespace detail

inline LinearMap derivation_matrix(const Derivation& D, unsigned N) {
    const AlgebraPtr& A = D.algebra();
    LinearMap out;
    out.domain = std_monomials(A, N);

    // The codomain must hold every image; start from the generator jump and
    // widen if a normal form climbs higher.
    std::int64_t jump = 0;
    for (std::size_t v = 0; v < A->ring()->size(); ++v)
        if (!D.image(v).is_zero())
            jump = std::max<std::int64_t>(jump, D.image(v).rep().total_degree() - 1);
    std::vector<Polynomial> images;
    images.reserve(out.domain.size());
    for (const auto& m : out.domain) {
        Polynomial im = D.apply(m).rep();
        images.push_back(im);
        jump = std::max<std::int64_t>(jump, im.total_degree() - m.rep().total_degree());
    }
    out.jump = static_cast<unsigned>(std::max<std::int64_t>(jump, 0));
    out.codomain = std_monomials(A, N + out.jump);

    auto index = detail::index_of(out.codomain, A->ring()->order());
    out.matrix.assign(out.codomain.size(), QVector(out.domain.size(), Rational(0)));
    for (std::size_t j = 0; j < images.size(); ++j) {
        QVector col = detail::coordinates(images[j], index, out.codomain.size());
        for (std::size_t i = 0; i < col.size(); ++i) out.matrix[i][j] = std::move(col[i]);
    }
    return out;
}

// Basis of a bounded kernel slice: every element is killed by all listed
// derivations, the constant 1 is always present, and the basis is canonical
// (nullspace of the stacked matrices with pivots in monomial order).
struct KernelSlice {
    std::vector<Derivation> derivations;
    unsigned N = 0;
    std::vector<Element> basis;

    bool constants_only() const {
        return basis.size() == 1 && basis[0].rep().is_constant();
    }
};

namespace detail {

inline KernelSlice kernel_from_nullspace(const AlgebraPtr& A,
                                         std::vector<Derivation> derivations, unsigned N,
                                         const std::vector<Element>& domain,
                                         const std::vector<QVector>& null_basis) {
    KernelSlice out{std::move(derivations), N, {}};
    for (const auto& v : null_basis) {
        Polynomial f = Polynomial::zero(A->ring());
        for (std::size_t j = 0; j < domain.size(); ++j)
            if (!v[j].is_zero()) f = f + domain[j].rep().scaled(v[j]);
        out.basis.emplace_back(A, f);
    }
    return out;
}

}  // namespace detail

inline KernelSlice kernel_basis_bounded(const Derivation& D, unsigned N) {
    LinearMap lm = derivation_matrix(D, N);
    std::vector<QVector> null_basis = nullspace(lm.matrix, lm.domain.size());
    return detail::kernel_from_nullspace(D.algebra(), {D}, N, lm.domain, null_basis);
}

// Intersection of the bounded kernels of a finite family of certified locally
// nilpotent derivations; an over-approximation of the Makar-Limanov invariant
// sliced at degree N. Derivations without a certificate are rejected rather
// than silently included.
inline KernelSlice ml_bounded(const std::vector<Derivation>& derivations, unsigned N,
                              unsigned certify_bound = 64) {
    if (derivations.empty()) throw InvalidSpec("ml_bounded needs at least one derivation");
    const AlgebraPtr& A = derivations.front().algebra();
    for (const auto& d : derivations) {
        if (!same_algebra(A, d.algebra())) throw MixedAlgebras();
        if (!certify_lnd(d, certify_bound))
            throw UncertifiedDerivation(d.label().empty() ? d.table_string() : d.label());
    }
    std::vector<Element> domain = std_monomials(A, N);
    QMatrix stacked;
    for (const auto& d : derivations) {
        LinearMap lm = derivation_matrix(d, N);
        for (auto& row : lm.matrix) stacked.push_back(std::move(row));
    }
    std::vector<QVector> null_basis = nullspace(std::move(stacked), domain.size());
    return detail::kernel_from_nullspace(A, derivations, N, domain, null_basis);
}

// ---------------------------------------------------------------------------
// Exhaustive search for locally nilpotent derivations over a finite grid.
// ---------------------------------------------------------------------------

struct SearchGrid {
    unsigned image_degree = 2;
    std::vector<Rational> coeffs = {-2, -1, 0, 1, 2};
    unsigned bound = 32;
};

inline std::size_t search_guard() {
    if (const char* env = std::getenv("LND_LAB_MAX_CANDIDATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

// All generator-image tables over the grid that define a derivation and
// certify locally nilpotent within the bound, in a deterministic order; the
// zero table is skipped. Ideal stability is linear in the table, so the grid
// is swept on the stable subspace only -- equivalent to scanning the full
// grid, since every stable table is determined by its free coordinates.
inline std::vector<Derivation> lnd_search(const AlgebraPtr& A, const SearchGrid& grid = {},
                                          std::size_t max_candidates = search_guard()) {
    const RingPtr& ring = A->ring();
    std::vector<Element> mons = std_monomials(A, grid.image_degree);
    const std::size_t k = mons.size();
    const std::size_t n = ring->size();
    const std::size_t cols = k * n;

    std::vector<Rational> coeffs = grid.coeffs;
    std::sort(coeffs.begin(), coeffs.end());
    coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
    if (coeffs.empty()) return {};

    // For each relation, the stability image of a table T is
    // sum_{(v, m)} T[v][m] * NF(d(rel)/dv * m), linear in T. Collect those
    // polynomials and run one exact nullspace over the stacked coefficient
    // rows; columns are ordered by (generator, monomial).
    std::vector<std::map<Monomial, std::size_t, MonomialDescending>> row_index;
    std::vector<std::size_t> row_base;
    std::size_t total_rows = 0;
    std::vector<std::vector<Polynomial>> contribs(A->relations().size());
    for (std::size_t r = 0; r < A->relations().size(); ++r) {
        const Polynomial& rel = A->relations()[r];
        std::vector<Polynomial> per_col;
        per_col.reserve(cols);
        for (std::size_t v = 0; v < n; ++v) {
            Polynomial partial = rel.derivative(v);
            for (std::size_t j = 0; j < k; ++j)
                per_col.push_back(A->reduce(partial * mons[j].rep()));
        }
        std::map<Monomial, std::size_t, MonomialDescending> index{
            MonomialDescending{ring->order()}};
        for (const auto& f : per_col)
            for (const auto& t : f.terms())
                index.emplace(t.mono, index.size());
        row_index.push_back(index);
        row_base.push_back(total_rows);
        total_rows += index.size();
        contribs[r] = std::move(per_col);
    }

    QMatrix system(total_rows, QVector(cols, Rational(0)));
    for (std::size_t r = 0; r < contribs.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            for (const auto& t : contribs[r][c].terms())
                system[row_base[r] + row_index[r].at(t.mono)][c] += t.coeff;

    std::vector<QVector> stable = nullspace(std::move(system), cols);
    const std::size_t s = stable.size();

    double log_candidates = static_cast<double>(s) * std::log2(static_cast<double>(coeffs.size()));
    if (log_candidates > 62 ||
        std::pow(static_cast<double>(coeffs.size()), static_cast<double>(s)) >
            static_cast<double>(max_candidates))
        throw SearchSpaceTooLarge(std::pow(static_cast<double>(coeffs.size()),
                                           static_cast<double>(s)),
                                  max_candidates);

    // Tight working caps: a candidate whose chains outgrow them cannot be
    // certified within this search and is dropped without further work.
    const CertifyLimits search_limits{64, 64};

    // Scalar multiples of one table terminate together, so certification is
    // memoized per direction (table normalized by its first nonzero entry).
    auto vec_less = [](const QVector& a, const QVector& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    };
    std::map<QVector, bool, decltype(vec_less)> direction_memo(vec_less);

    std::vector<Derivation> found;
    std::vector<std::size_t> pick(s, 0);
    QVector table(cols, Rational(0));
    while (true) {
        // Reconstruct the table from the free coordinates, bailing at the
        // first coordinate outside the grid.
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < s; ++i)
            if (!coeffs[pick[i]].is_zero()) active.push_back(i);
        bool admissible = !active.empty();
        if (admissible) {
            for (std::size_t c = 0; c < cols; ++c) {
                Rational val(0);
                for (std::size_t i : active) {
                    if (!stable[i][c].is_zero()) val += coeffs[pick[i]] * stable[i][c];
                }
                if (!std::binary_search(coeffs.begin(), coeffs.end(), val)) {
                    admissible = false;
                    break;
                }
                table[c] = std::move(val);
            }
        }
        if (admissible) {
            QVector direction = table;
            for (const auto& c : table)
                if (!c.is_zero()) {
                    Rational inv = c.inverse();
                    for (auto& x : direction) x *= inv;
                    break;
                }
            auto memo = direction_memo.find(direction);
            bool promising = memo == direction_memo.end() || memo->second;
            if (promising) {
                std::map<std::string, Polynomial> images;
                for (std::size_t v = 0; v < n; ++v) {
                    Polynomial im = Polynomial::zero(ring);
                    for (std::size_t j = 0; j < k; ++j) {
                        const Rational& c = table[v * k + j];
                        if (!c.is_zero()) im = im + mons[j].rep().scaled(c);
                    }
                    images.emplace(ring->var_name(v), std::move(im));
                }
                Derivation d = define_derivation(A, images,
                                                 "search#" + std::to_string(found.size()));
                bool certified = certify_lnd(d, grid.bound, search_limits).has_value();
                direction_memo.emplace(std::move(direction), certified);
                if (certified) found.push_back(std::move(d));
            }
        }
        // advance odometer
        std::size_t i = 0;
        for (; i < s; ++i) {
            if (++pick[i] < coeffs.size()) break;
            pick[i] = 0;
        }
        if (i == s) break;
    }
    return found;
}

}  // namespace lndlab
