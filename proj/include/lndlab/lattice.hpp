#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "lndlab/errors.hpp"

namespace lndlab {

using DegVec = std::vector<long long>;

inline std::string degvec_string(const DegVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

// Lexicographic comparison on Z^d.
inline int degvec_compare(const DegVec& a, const DegVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// Subgroup of Z^d held as a Hermite-normal-form row basis: row echelon,
// positive pivots, entries above a pivot reduced modulo it. The form is
// canonical, so lattice equality is basis equality.
class Lattice {
  public:
    static Lattice span(std::vector<DegVec> vectors, std::size_t dim) {
        for (const auto& v : vectors)
            if (v.size() != dim) throw DimensionMismatch();
        Lattice l;
        l.dim_ = dim;
        l.rows_ = hermite_normal_form(std::move(vectors), dim);
        return l;
    }

    static Lattice standard(std::size_t dim) {
        std::vector<DegVec> rows;
        for (std::size_t i = 0; i < dim; ++i) {
            DegVec v(dim, 0);
            v[i] = 1;
            rows.push_back(std::move(v));
        }
        return span(std::move(rows), dim);
    }

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<DegVec>& rows() const { return rows_; }

    bool contains(DegVec v) const {
        if (v.size() != dim_) throw DimensionMismatch();
        for (const auto& row : rows_) {
            std::size_t pivot = pivot_column(row);
            if (v[pivot] == 0) continue;
            if (v[pivot] % row[pivot] != 0) return false;
            long long q = v[pivot] / row[pivot];
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= q * row[j];
        }
        for (long long x : v)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Lattice& sub) const {
        if (sub.dim_ != dim_) throw DimensionMismatch();
        for (const auto& row : sub.rows_)
            if (!contains(row)) return false;
        return true;
    }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

    std::string to_string() const {
        if (rows_.empty()) return "(0)";
        std::string out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) out += ";";
            out += degvec_string(rows_[i]);
        }
        return out;
    }

  private:
    static std::size_t pivot_column(const DegVec& row) {
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) return j;
        return row.size();
    }

    static std::vector<DegVec> hermite_normal_form(std::vector<DegVec> rows, std::size_t dim) {
        // Drop zero rows up front.
        std::vector<DegVec> work;
        for (auto& r : rows) {
            bool zero = true;
            for (long long x : r) zero = zero && x == 0;
            if (!zero) work.push_back(std::move(r));
        }
        std::vector<DegVec> result;
        std::size_t col = 0;
        while (col < dim && !work.empty()) {
            // Euclidean elimination within the column.
            while (true) {
                std::size_t best = work.size();
                for (std::size_t i = 0; i < work.size(); ++i) {
                    if (work[i][col] == 0) continue;
                    if (best == work.size() ||
                        std::abs(work[i][col]) < std::abs(work[best][col]))
                        best = i;
                }
                if (best == work.size()) break;  // column exhausted
                std::swap(work[0], work[best]);
                bool cleared = true;
                for (std::size_t i = 1; i < work.size(); ++i) {
                    if (work[i][col] == 0) continue;
                    long long q = work[i][col] / work[0][col];
                    for (std::size_t j = 0; j < dim; ++j) work[i][j] -= q * work[0][j];
                    if (work[i][col] != 0) cleared = false;
                }
                if (cleared) {
                    DegVec pivot_row = work[0];
                    work.erase(work.begin());
                    if (pivot_row[col] < 0)
                        for (auto& x : pivot_row) x = -x;
                    result.push_back(std::move(pivot_row));
                    // Remove rows that became zero.
                    std::erase_if(work, [](const DegVec& r) {
                        for (long long x : r)
                            if (x != 0) return false;
                        return true;
                    });
                    break;
                }
            }
            ++col;
        }
        // Reduce entries above each pivot into [0, pivot). Pivots are handled
        // left to right: a reduction only touches columns at or after its
        // pivot, so entries already in range stay in range.
        for (std::size_t i = 0; i < result.size(); ++i) {
            std::size_t p = pivot_column(result[i]);
            for (std::size_t k = 0; k < i; ++k) {
                long long e = result[k][p];
                long long q = e / result[i][p];
                if (e % result[i][p] < 0) q -= 1;  // floor division
                if (q == 0) continue;
                for (std::size_t j = 0; j < result[i].size(); ++j)
                    result[k][j] -= q * result[i][j];
            }
        }
        return result;
    }

    std::size_t dim_ = 0;
    std::vector<DegVec> rows_;
};

inline Lattice lattice_span(const std::vector<DegVec>& vectors) {
    if (vectors.empty()) return Lattice::span({}, 0);
    return Lattice::span(vectors, vectors.front().size());
}

// True iff sub is strictly contained in amb.
inline bool lattice_proper_in(const Lattice& sub, const Lattice& amb) {
    if (sub.dim() != amb.dim()) throw DimensionMismatch();
    return amb.contains(sub) && !sub.contains(amb);
}

}  // namespace lndlab
