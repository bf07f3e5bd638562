#ifndef SEMIDEC_LINALG_HPP
#define SEMIDEC_LINALG_HPP

#include <cstddef>
#include <vector>

#include "field.hpp"

namespace semidec {

using Matrix = std::vector<std::vector<Fe>>;

inline size_t rankOf(const Field& F, Matrix a)
{
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        Fe inv = F.inv(a[rank][col]);
        for (size_t j = col; j < cols; ++j) a[rank][j] = F.mul(a[rank][j], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Fe c = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] = F.sub(a[r][j], F.mul(c, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

/// Basis of { v : a v = 0 }, via reduced row echelon form.
inline std::vector<std::vector<Fe>> kernelBasis(const Field& F, Matrix a, size_t cols)
{
    size_t rows = a.size();
    std::vector<size_t> pivotCol;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        Fe inv = F.inv(a[rank][col]);
        for (size_t j = col; j < cols; ++j) a[rank][j] = F.mul(a[rank][j], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Fe c = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] = F.sub(a[r][j], F.mul(c, a[rank][j]));
        }
        pivotCol.push_back(col);
        ++rank;
    }
    std::vector<bool> isPivot(cols, false);
    for (size_t c : pivotCol) isPivot[c] = true;
    std::vector<std::vector<Fe>> basis;
    for (size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Fe> v(cols, 0);
        v[freeCol] = 1;
        for (size_t r = 0; r < rank; ++r) v[pivotCol[r]] = F.neg(a[r][freeCol]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace semidec

#endif
