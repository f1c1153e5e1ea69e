#pragma once

// Exact feasibility oracle for open polyhedral cones: given hyperplane
// normals n_i and requested signs s_i, find x with sign(<n_i, x>) = s_i for
// every i, or certify that the open cone is empty.
//
// Method: maximize delta subject to s_i <n_i, x> >= delta, 0 <= delta <= 1,
// with x split into nonnegative parts.  The origin is a basic feasible
// start, so a single simplex phase with Bland's rule suffices and
// terminates.  Scaling the cone shows the optimum is exactly 1 when the
// open cone is nonempty and exactly 0 otherwise.

#include <cstddef>
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace regionzeta {

inline std::optional<Vec> feasible_interior_point(const std::vector<Vec>& normals,
                                                  const std::vector<int>& signs) {
    const size_t m = normals.size();
    const size_t d = normals.empty() ? 0 : normals[0].size();
    if (signs.size() != m) throw Error("signs/normals length mismatch");

    // columns: x+ (d), x- (d), delta, slacks (m+1), rhs
    const size_t col_delta = 2 * d;
    const size_t n_struct = 2 * d + 1;
    const size_t rows = m + 1;
    const size_t n_total = n_struct + rows;
    const size_t rhs = n_total;

    std::vector<Vec> tab(rows + 1, Vec(n_total + 1, Scalar(0)));
    for (size_t i = 0; i < m; ++i) {
        // -s_i <n_i, x+ - x-> + delta <= 0
        for (size_t j = 0; j < d; ++j) {
            Scalar c = normals[i][j];
            if (signs[i] > 0) c = -c;
            tab[i][j] = c;
            tab[i][d + j] = -c;
        }
        tab[i][col_delta] = Scalar(1);
        tab[i][n_struct + i] = Scalar(1);
    }
    // delta <= 1
    tab[m][col_delta] = Scalar(1);
    tab[m][n_struct + m] = Scalar(1);
    tab[m][rhs] = Scalar(1);
    // objective: maximize delta (stored as z - delta = 0)
    tab[rows][col_delta] = Scalar(-1);

    std::vector<size_t> basic(rows);
    for (size_t i = 0; i < rows; ++i) basic[i] = n_struct + i;

    size_t safety = 0;
    const size_t safety_cap = 200000 + 2000 * rows;
    for (;;) {
        if (++safety > safety_cap) throw Error("simplex failed to terminate (internal error)");
        // Bland: entering column of smallest index with negative reduced cost
        size_t enter = n_total;
        for (size_t j = 0; j < n_total; ++j) {
            if (tab[rows][j].sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n_total) break;
        // leaving row by exact minimum ratio, ties broken by basic label
        size_t leave = rows;
        for (size_t i = 0; i < rows; ++i) {
            if (tab[i][enter].sign() <= 0) continue;
            if (leave == rows) {
                leave = i;
                continue;
            }
            const Scalar cmp = tab[i][rhs] * tab[leave][enter] - tab[leave][rhs] * tab[i][enter];
            const int c = cmp.sign();
            if (c < 0 || (c == 0 && basic[i] < basic[leave])) leave = i;
        }
        if (leave == rows) throw Error("simplex detected an unbounded ray (internal error)");

        const Scalar inv = Scalar(1) / tab[leave][enter];
        for (size_t j = 0; j <= n_total; ++j) tab[leave][j] *= inv;
        for (size_t i = 0; i <= rows; ++i) {
            if (i == leave || tab[i][enter].is_zero()) continue;
            const Scalar f = tab[i][enter];
            for (size_t j = 0; j <= n_total; ++j) tab[i][j] -= f * tab[leave][j];
        }
        basic[leave] = enter;
    }

    Vec values(n_struct, Scalar(0));
    for (size_t i = 0; i < rows; ++i)
        if (basic[i] < n_struct) values[basic[i]] = tab[i][rhs];

    if (values[col_delta].sign() <= 0) return std::nullopt;

    Vec x(d, Scalar(0));
    for (size_t j = 0; j < d; ++j) x[j] = values[j] - values[d + j];
    for (size_t i = 0; i < m; ++i) {
        if (dot(normals[i], x).sign() != signs[i])
            throw Error("feasibility witness failed exact sign check (internal error)");
    }
    return x;
}

} // namespace regionzeta
