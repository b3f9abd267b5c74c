#pragma once

// Test-only reference implementations. None of them share code with the
// library's lattice routines.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nobeling/cube.hpp"
#include "nobeling/random.hpp"
#include "nobeling/zlattice.hpp"

namespace oracle {

using nobeling::Integer;
using nobeling::IntMatrix;
using nobeling::IntVector;

inline nobeling::CubeSet cube(std::size_t n, const std::vector<std::string>& points) {
    return nobeling::CubeSet::from_strings(nobeling::CoordinateOrder(n), points);
}

// Bareiss fraction-free elimination; returns the rank.
inline std::size_t bareiss_rank(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(rank, j), a(piv, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a(i, j) = (a(rank, c) * a(i, j) - a(i, c) * a(rank, j)) / prev;
            }
            a(i, c) = 0;
        }
        prev = a(rank, c);
        ++rank;
    }
    return rank;
}

// Bareiss determinant of a square matrix.
inline Integer bareiss_det(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Leibniz expansion; only for tiny matrices.
inline Integer leibniz_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Integer total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) sign = -sign;
            }
        }
        Integer term = sign;
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (pick[i]) s.push_back(i);
        }
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline std::vector<std::vector<Integer>> submatrix(const std::vector<IntVector>& rows,
                                                   const std::vector<std::size_t>& ri,
                                                   const std::vector<std::size_t>& ci) {
    std::vector<std::vector<Integer>> m;
    for (std::size_t r : ri) {
        std::vector<Integer> row;
        for (std::size_t c : ci) row.push_back(rows[r][c]);
        m.push_back(row);
    }
    return m;
}

// Bounded search for x with x * rows = v, rows k x m with k, m <= 4.
//
// Let r be the rank, M a nonsingular r x r submatrix on generator set B and
// column set C, D = det M. For each generator j outside B the vector with
// D at j and Cramer cofactors on B lies in the left kernel, so any solution
// can be shifted until every non-basic x_j lies in [0, |D|). The basic part
// is then forced: x_B = (v_C - sum_j x_j a_{j,C}) M^{-1}. Searching that box
// and solving the basic part exactly is therefore complete. Every entry of
// the result is bounded by Delta' (1 + (k - r) Delta), where Delta and
// Delta' are the largest r x r minors of rows and of rows with v appended.
inline std::optional<IntVector> brute_force_membership(const std::vector<IntVector>& rows,
                                                       const IntVector& v) {
    const std::size_t k = rows.size();
    const std::size_t m = v.size();
    std::size_t r = std::min(k, m);
    std::vector<std::size_t> basic, cols;
    Integer d = 0;
    for (; r > 0; --r) {
        for (const auto& bi : subsets_of_size(k, r)) {
            for (const auto& ci : subsets_of_size(m, r)) {
                const Integer det = leibniz_det(submatrix(rows, bi, ci));
                if (det != 0) {
                    basic = bi;
                    cols = ci;
                    d = det;
                    break;
                }
            }
            if (d != 0) break;
        }
        if (d != 0) break;
    }
    if (r == 0) {
        if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) {
            return IntVector(k, 0);
        }
        return std::nullopt;
    }
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < k; ++j) {
        if (std::find(basic.begin(), basic.end(), j) == basic.end()) free.push_back(j);
    }
    const Integer span = abs(d);
    IntVector x(k, 0);
    for (;;) {
        // rhs = v_C - sum over free j of x_j a_{j,C}
        std::vector<Integer> rhs(r);
        for (std::size_t c = 0; c < r; ++c) {
            rhs[c] = v[cols[c]];
            for (std::size_t j : free) rhs[c] -= x[j] * rows[j][cols[c]];
        }
        // Cramer: x_B[i] = det(M with row i replaced by rhs) / D
        auto mat = submatrix(rows, basic, cols);
        bool integral = true;
        for (std::size_t i = 0; i < r && integral; ++i) {
            auto replaced = mat;
            replaced[i] = rhs;
            const Integer num = leibniz_det(replaced);
            if (num % d != 0) {
                integral = false;
            } else {
                x[basic[i]] = num / d;
            }
        }
        if (integral) {
            bool ok = true;
            for (std::size_t c = 0; c < m && ok; ++c) {
                Integer sum = 0;
                for (std::size_t j = 0; j < k; ++j) sum += x[j] * rows[j][c];
                ok = sum == v[c];
            }
            if (ok) return x;
        }
        // next free assignment in [0, |D|)^free
        std::size_t pos = 0;
        while (pos < free.size()) {
            x[free[pos]] += 1;
            if (x[free[pos]] < span) break;
            x[free[pos]] = 0;
            ++pos;
        }
        if (pos == free.size()) return std::nullopt;
    }
}

inline IntMatrix random_matrix(nobeling::Rng& rng, std::size_t rows, std::size_t cols,
                               long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = static_cast<long>(nobeling::uniform_int(rng, lo, hi));
        }
    }
    return m;
}

inline std::vector<IntVector> rows_of(const IntMatrix& m) {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

}  // namespace oracle
