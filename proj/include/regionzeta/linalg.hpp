#pragma once

// Dense exact linear algebra over Scalar: reduced row echelon form, rank,
// kernels, solving, membership tests.  Everything is deterministic; RREF of
// a row space is its canonical representative.

#include <cstddef>
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace regionzeta {

using Mat = std::vector<Vec>; // row-major

inline Mat identity_matrix(size_t n) {
    Mat m(n, Vec(n, Scalar(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

inline Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size(), Scalar(0)));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
    Vec out(m.size(), Scalar(0));
    for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat out(n, Vec(p, Scalar(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t c = 0; c < p; ++c) out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

// In-place reduced row echelon form.  Returns the pivot columns; the rank is
// their count.  Zero rows are removed.
inline std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = m.size();
        for (size_t r = row; r < m.size(); ++r) {
            if (!m[r][col].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Scalar inv = Scalar(1) / m[row][col];
        for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Scalar f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row, Vec());
    return pivots;
}

inline size_t rank_of(Mat m) { return rref(m).size(); }

// Reduce v against RREF rows (pivot columns given); the remainder is zero
// iff v lies in the row space.
inline Vec reduce_against(const Mat& rows, const std::vector<size_t>& pivots, Vec v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        const Scalar& c = v[pivots[r]];
        if (c.is_zero()) continue;
        const Scalar f = c;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    return v;
}

inline bool in_rowspace(const Mat& rows, const std::vector<size_t>& pivots, const Vec& v) {
    return is_zero(reduce_against(rows, pivots, v));
}

// Kernel of the linear map x -> (dot(row, x))_rows, as a deterministic list
// of basis columns: one vector per free column of the RREF.
inline std::vector<Vec> kernel_basis(Mat rows, size_t dim) {
    const std::vector<size_t> pivots = rref(rows);
    std::vector<bool> is_pivot(dim, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        Vec x(dim, Scalar(0));
        x[f] = Scalar(1);
        for (size_t r = 0; r < rows.size(); ++r) x[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solve sum_j c_j * columns[j] = target exactly; nullopt when inconsistent.
inline std::optional<Vec> solve_columns(const std::vector<Vec>& columns, const Vec& target) {
    const size_t dim = target.size(), k = columns.size();
    Mat aug(dim, Vec(k + 1, Scalar(0)));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k] = target[i];
    }
    const std::vector<size_t> pivots = rref(aug);
    Vec c(k, Scalar(0));
    for (size_t r = 0; r < aug.size(); ++r) {
        if (pivots[r] == k) return std::nullopt; // pivot in the RHS column
        c[pivots[r]] = aug[r][k];
    }
    // Under-determined systems return the representative with free
    // coordinates zero; callers that need uniqueness pass independent columns.
    return c;
}

inline std::optional<Mat> inverse(Mat m) {
    const size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        Vec ext(n, Scalar(0));
        ext[i] = Scalar(1);
        m[i].insert(m[i].end(), ext.begin(), ext.end());
    }
    const std::vector<size_t> pivots = rref(m);
    if (pivots.size() != n) return std::nullopt;
    for (size_t r = 0; r < n; ++r)
        if (pivots[r] != r) return std::nullopt;
    Mat inv(n, Vec(n, Scalar(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

inline std::string mat_key(const Mat& m) {
    std::string out;
    for (const auto& row : m) {
        out += vec_key(row);
        out += '\n';
    }
    return out;
}

} // namespace regionzeta
