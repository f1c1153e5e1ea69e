#pragma once

// Linear isomorphism testing for essential central arrangements: find an
// invertible map carrying one normal set onto the other, line by line.
// Works by projective frames: a basis of r normals plus one more normal in
// general position pins the map up to a global scale, so candidate images
// can be enumerated and checked exactly.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <map>
#include <unordered_set>
#include <vector>

#include "arrangement.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace regionzeta {

namespace detail {

// Finest partition of the normals into blocks spanning independent
// subspaces (matroid components).  Pick one basis greedily; every other
// normal is joined to the basis elements appearing in its expansion, and
// the classes of that incidence are exactly the components.
inline std::vector<std::vector<size_t>> direct_sum_components(const std::vector<Vec>& normals) {
    const size_t n = normals.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](size_t a, size_t b) { parent[find(a)] = find(b); };

    std::vector<size_t> basis;
    Mat rows;
    size_t rank = 0;
    for (size_t i = 0; i < n; ++i) {
        rows.push_back(normals[i]);
        Mat probe = rows;
        if (rref(probe).size() > rank) {
            ++rank;
            basis.push_back(i);
        } else {
            rows.pop_back();
            std::vector<Vec> cols;
            for (size_t b : basis) cols.push_back(normals[b]);
            auto c = solve_columns(cols, normals[i]);
            for (size_t j = 0; j < basis.size(); ++j)
                if (!(*c)[j].is_zero()) join(i, basis[j]);
        }
    }

    std::map<size_t, std::vector<size_t>> classes;
    for (size_t i = 0; i < n; ++i) classes[find(i)].push_back(i);
    std::vector<std::vector<size_t>> blocks;
    for (auto& [root, members] : classes) blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

struct Frame {
    std::vector<size_t> basis; // r independent normal indices
    size_t extra = 0;          // index with all-nonzero coordinates in that basis
    Vec coords;                // coordinates of `extra` in the basis
};

inline std::optional<Frame> find_frame(const std::vector<Vec>& normals, size_t r) {
    // try basis subsets in lexicographic order, a bounded number of them
    std::vector<size_t> idx(r);
    for (size_t i = 0; i < r; ++i) idx[i] = i;
    const size_t n = normals.size();
    size_t tries = 0;
    for (;;) {
        if (++tries > 5000) return std::nullopt;
        std::vector<Vec> cols;
        for (size_t i : idx) cols.push_back(normals[i]);
        if (rank_of(cols) == r) {
            for (size_t e = 0; e < n; ++e) {
                if (std::find(idx.begin(), idx.end(), e) != idx.end()) continue;
                auto c = solve_columns(cols, normals[e]);
                if (!c) continue;
                bool all_nonzero = true;
                for (const Scalar& x : *c)
                    if (x.is_zero()) {
                        all_nonzero = false;
                        break;
                    }
                if (all_nonzero) return Frame{idx, e, *c};
            }
        }
        // next combination
        size_t i = r;
        while (i-- > 0) {
            if (idx[i] != n - r + i) {
                ++idx[i];
                for (size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return std::nullopt;
        }
    }
}

inline std::optional<Mat> isomorphism_core(const std::vector<Vec>& na, const std::vector<Vec>& nb,
                                           size_t r);

// A block-diagonal map assembled from per-component isomorphisms, for
// arrangements that decompose as direct sums (where no projective frame
// exists).  Components are matched by (size, rank) signature, trying the
// possible assignments within each signature class.
inline std::optional<Mat> isomorphism_by_components(const std::vector<Vec>& na,
                                                    const std::vector<Vec>& nb, size_t r) {
    const auto comp_a = direct_sum_components(na);
    const auto comp_b = direct_sum_components(nb);
    if (comp_a.size() != comp_b.size() || comp_a.size() <= 1) return std::nullopt;

    auto block_data = [&](const std::vector<Vec>& normals, const std::vector<size_t>& block) {
        Mat basis;
        for (size_t i : block) basis.push_back(normals[i]);
        rref(basis); // rows span the block
        std::vector<Vec> local;
        for (size_t i : block) {
            auto c = solve_columns(basis, normals[i]);
            local.push_back(canonicalize_normal(*c));
        }
        return std::make_pair(basis, local);
    };

    struct Block {
        Mat basis;
        std::vector<Vec> local;
    };
    std::vector<Block> blocks_a, blocks_b;
    for (const auto& c : comp_a) {
        auto [basis, local] = block_data(na, c);
        blocks_a.push_back({std::move(basis), std::move(local)});
    }
    for (const auto& c : comp_b) {
        auto [basis, local] = block_data(nb, c);
        blocks_b.push_back({std::move(basis), std::move(local)});
    }

    // candidate targets per source block, by signature
    const size_t k = blocks_a.size();
    std::vector<std::vector<size_t>> options(k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (blocks_a[i].local.size() == blocks_b[j].local.size() &&
                blocks_a[i].basis.size() == blocks_b[j].basis.size())
                options[i].push_back(j);

    std::vector<size_t> assign(k, 0);
    std::vector<bool> taken(k, false);
    std::vector<std::optional<Mat>> sub(k);
    auto rec = [&](auto&& self, size_t depth) -> bool {
        if (depth == k) return true;
        for (size_t j : options[depth]) {
            if (taken[j]) continue;
            auto s = isomorphism_core(blocks_a[depth].local, blocks_b[j].local,
                                      blocks_a[depth].basis.size());
            if (!s) continue;
            taken[j] = true;
            assign[depth] = j;
            sub[depth] = std::move(s);
            if (self(self, depth + 1)) return true;
            taken[j] = false;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    // assemble: P has the source block bases as columns, Q their images
    Mat p_cols, q_cols;
    for (size_t i = 0; i < k; ++i) {
        const Mat& bs = blocks_a[i].basis;
        const Mat& bt = blocks_b[assign[i]].basis;
        const Mat& s = *sub[i];
        for (size_t j = 0; j < bs.size(); ++j) {
            p_cols.push_back(bs[j]);
            Vec img(r, Scalar(0));
            for (size_t q = 0; q < bt.size(); ++q)
                for (size_t c = 0; c < r; ++c) img[c] += s[q][j] * bt[q][c];
            q_cols.push_back(std::move(img));
        }
    }
    Mat p(r, Vec(r, Scalar(0))), q(r, Vec(r, Scalar(0)));
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < r; ++i) {
            p[i][j] = p_cols[j][i];
            q[i][j] = q_cols[j][i];
        }
    auto p_inv = inverse(p);
    if (!p_inv) return std::nullopt;
    return mat_mul(q, *p_inv);
}

// Core search on essentialized, canonicalized normal lists of equal rank r.
inline std::optional<Mat> isomorphism_core(const std::vector<Vec>& na, const std::vector<Vec>& nb,
                                           size_t r) {
    const size_t n = na.size();

    std::unordered_set<std::string> target;
    for (const Vec& v : nb) target.insert(vec_key(v));

    if (r == 0) return Mat{};
    if (n == r) {
        // all normals independent on both sides: map the bases in order
        Mat m_b(r, Vec(r, Scalar(0)));
        Mat m_a(r, Vec(r, Scalar(0)));
        for (size_t j = 0; j < r; ++j)
            for (size_t i = 0; i < r; ++i) {
                m_b[i][j] = nb[j][i];
                m_a[i][j] = na[j][i];
            }
        auto inv_a = inverse(m_a);
        if (!inv_a) return std::nullopt;
        return mat_mul(m_b, *inv_a);
    }

    auto frame = find_frame(na, r);
    if (!frame) return isomorphism_by_components(na, nb, r);

    // columns of the source basis, inverted once
    Mat src(r, Vec(r, Scalar(0)));
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < r; ++i) src[i][j] = na[frame->basis[j]][i];
    auto src_inv = inverse(src);
    if (!src_inv) return std::nullopt;

    // enumerate ordered images (w_1..w_r, w*) among the normals of B
    std::vector<size_t> pick(r, 0);
    std::vector<bool> used(n, false);

    std::vector<Vec> wcols(r);
    auto try_extra = [&](size_t wstar) -> std::optional<Mat> {
        auto d = solve_columns(wcols, nb[wstar]);
        if (!d) return std::nullopt;
        std::vector<Scalar> lambda(r);
        for (size_t i = 0; i < r; ++i) {
            if ((*d)[i].is_zero()) return std::nullopt;
            lambda[i] = (*d)[i] / frame->coords[i];
        }
        Mat scaled_cols(r, Vec(r, Scalar(0)));
        for (size_t j = 0; j < r; ++j)
            for (size_t i = 0; i < r; ++i) scaled_cols[i][j] = lambda[j] * wcols[j][i];
        Mat s = mat_mul(scaled_cols, *src_inv);
        for (size_t i = 0; i < n; ++i) {
            if (!target.count(vec_key(canonicalize_normal(mat_vec(s, na[i]))))) return std::nullopt;
        }
        return s;
    };

    // depth-first enumeration of ordered r-tuples of distinct target normals
    std::optional<Mat> found;
    auto rec = [&](auto&& self, size_t depth) -> bool {
        if (depth == r) {
            std::vector<Vec> cols;
            for (size_t j = 0; j < r; ++j) cols.push_back(nb[pick[j]]);
            if (rank_of(cols) != r) return false;
            for (size_t j = 0; j < r; ++j) wcols[j] = nb[pick[j]];
            for (size_t w = 0; w < n; ++w) {
                if (used[w]) continue;
                if (auto s = try_extra(w)) {
                    found = std::move(*s);
                    return true;
                }
            }
            return false;
        }
        for (size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            pick[depth] = c;
            used[c] = true;
            const bool ok = self(self, depth + 1);
            used[c] = false;
            if (ok) return true;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

} // namespace detail

// Invertible matrix S (on essential coordinates) with { S n : n in A } equal
// to the normals of B as lines, or nullopt.  Both arrangements are
// essentialized internally; direct sums are handled blockwise.
inline std::optional<Mat> find_linear_isomorphism(const Arrangement& a, const Arrangement& b) {
    if (a.size() != b.size()) return std::nullopt;
    const Essentialization ea = essentialize(a);
    const Essentialization eb = essentialize(b);
    if (ea.rank != eb.rank) return std::nullopt;

    std::vector<Vec> na, nb;
    for (const Vec& v : ea.normals) na.push_back(canonicalize_normal(v));
    for (const Vec& v : eb.normals) nb.push_back(canonicalize_normal(v));
    auto s = detail::isomorphism_core(na, nb, static_cast<size_t>(ea.rank));

    if (s) {
        // exact post-check: the map really carries normal lines onto normal lines
        std::unordered_set<std::string> target;
        for (const Vec& v : nb) target.insert(vec_key(v));
        for (const Vec& v : na)
            if (!target.count(vec_key(canonicalize_normal(mat_vec(*s, v))))) return std::nullopt;
    }
    return s;
}

} // namespace regionzeta
