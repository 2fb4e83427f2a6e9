#pragma once

#include <cstddef>
#include <vector>

#include "lndlab/rational.hpp"

namespace lndlab {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row major

// In-place reduced row echelon form; returns the pivot columns in increasing
// order. Pivoting scans columns left to right and rows top down, so the
// result is deterministic for a fixed input.
inline std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = row; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        Rational inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Nullspace basis of an m x n matrix: one vector per free column, carrying 1
// at its free column and the negated pivot-row entries elsewhere. Vectors are
// ordered by free column, which makes downstream results canonical.
inline std::vector<QVector> nullspace(QMatrix m, std::size_t cols) {
    if (m.empty()) {
        std::vector<QVector> basis;
        for (std::size_t j = 0; j < cols; ++j) {
            QVector v(cols, Rational(0));
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        QVector v(cols, Rational(0));
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

// Solves sum c_i basis_i = target exactly; empty result when inconsistent.
// Used by tests and the corpus runner for span membership.
inline std::optional<QVector> solve_in_span(const std::vector<QVector>& basis,
                                            const QVector& target) {
    std::size_t dim = target.size();
    QMatrix m(dim, QVector(basis.size() + 1, Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = basis[j][i];
    for (std::size_t i = 0; i < dim; ++i) m[i][basis.size()] = target[i];
    std::vector<std::size_t> pivots = rref(m);
    for (auto p : pivots)
        if (p == basis.size()) return std::nullopt;  // pivot in the target column
    QVector coeffs(basis.size(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = m[i][basis.size()];
    return coeffs;
}

}  // namespace lndlab
