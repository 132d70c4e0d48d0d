#ifndef MACKEY_LINALG_HPP
#define MACKEY_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mackey/rational.hpp"

namespace mackey {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Solves sum_j x_j * gens[j] = target exactly.  Returns one solution (free
// variables pinned to zero) or nullopt if the system is inconsistent.  The
// generator lists used by the callers (simple roots of a sub-datum) are
// linearly independent, making the solution unique there.
inline std::optional<RatVec> solve_in_span(const std::vector<RatVec>& gens, const RatVec& target) {
    const std::size_t k = gens.size();
    const std::size_t n = target.size();
    for (const auto& g : gens)
        if (g.size() != n) throw InvalidInput("solve_in_span: generator length mismatch");

    // Augmented matrix, one row per coordinate.
    RatMat a(n, RatVec(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = gens[j][i];
        a[i][k] = target[i];
    }

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (std::size_t j = col; j <= k; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (!a[i][k].is_zero()) return std::nullopt;

    RatVec x(k, Rat(0));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = a[i][k];
    return x;
}

inline std::int64_t det_int(const IntMat& m) {
    const std::size_t n = m.size();
    RatMat a(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw InvalidInput("det_int: not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    }
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    if (!det.is_integer()) throw Error("det_int: integer matrix with non-integer determinant");
    return det.num();
}

} // namespace mackey

#endif
