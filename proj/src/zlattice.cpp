#include "nobeling/zlattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "nobeling/errors.hpp"

namespace nobeling {

namespace {

// dst[from..] -= q * src[from..]
void submul_row(std::span<Integer> dst, std::span<const Integer> src, const Integer& q,
                std::size_t from = 0) {
    for (std::size_t k = from; k < dst.size(); ++k) {
        if (sgn(src[k]) != 0) mpz_submul(dst[k].get_mpz_t(), q.get_mpz_t(), src[k].get_mpz_t());
    }
}

void negate_row(std::span<Integer> row) {
    for (auto& x : row) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = m.row(a);
    auto rb = m.row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// In-place Hermite reduction of h; applies the same row operations to *u when given.
std::vector<std::size_t> hermite_reduce(IntMatrix& h, IntMatrix* u) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Integer q;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        bool found = false;
        for (;;) {
            // Smallest nonzero magnitude in column c at or below row r.
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (sgn(h(i, c)) == 0) continue;
                if (best == m || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0) best = i;
            }
            if (best == m) break;
            found = true;
            swap_rows(h, r, best);
            if (u) swap_rows(*u, r, best);
            bool cleared = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (sgn(h(i, c)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                submul_row(h.row(i), h.row(r), q, c);
                if (u) submul_row(u->row(i), u->row(r), q);
                if (sgn(h(i, c)) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (!found) continue;
        if (sgn(h(r, c)) < 0) {
            negate_row(h.row(r));
            if (u) negate_row(u->row(r));
        }
        for (std::size_t i = 0; i < r; ++i) {
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (sgn(q) == 0) continue;
            submul_row(h.row(i), h.row(r), q, c);
            if (u) submul_row(u->row(i), u->row(r), q);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

IntMatrix nonzero_rows(const IntMatrix& h, std::size_t rank) { return h.top_rows(rank); }

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw ContractError("matrix entry count " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
    }
}

IntMatrix IntMatrix::identity(std::size_t k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ContractError("row length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

IntMatrix IntMatrix::top_rows(std::size_t k) const {
    IntMatrix out(k, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(k * cols_),
              out.data_.begin());
    return out;
}

void IntMatrix::append_row(std::span<const Integer> values) {
    if (values.size() != cols_) throw ContractError("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw ContractError("matrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    }
    return out;
}

IntVector row_times(std::span<const Integer> x, const IntMatrix& m) {
    if (x.size() != m.rows()) throw ContractError("vector-matrix dimension mismatch");
    IntVector out(m.cols());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (sgn(x[k]) == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_addmul(out[j].get_mpz_t(), x[k].get_mpz_t(), m(k, j).get_mpz_t());
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

HnfResult hnf(const IntMatrix& m) {
    HnfResult out{m, IntMatrix::identity(m.rows()), 0, {}};
    out.pivots = hermite_reduce(out.h, &out.u);
    out.rank = out.pivots.size();
    return out;
}

IntMatrix hnf_form(const IntMatrix& m) {
    IntMatrix h = m;
    hermite_reduce(h, nullptr);
    return h;
}

std::size_t int_rank(const IntMatrix& m) {
    IntMatrix h = m;
    return hermite_reduce(h, nullptr).size();
}

LatticeSolver::LatticeSolver(const IntMatrix& generators)
    : generators_(generators), form_(hnf(generators)), cols_(generators.cols()) {}

std::optional<IntVector> LatticeSolver::solve(std::span<const Integer> v) const {
    if (v.size() != cols_) {
        throw ContractError("membership: vector length " + std::to_string(v.size()) +
                            " does not match " + std::to_string(cols_) + " columns");
    }
    IntVector w(v.begin(), v.end());
    IntVector y(form_.rank);
    Integer r;
    for (std::size_t i = 0; i < form_.rank; ++i) {
        const std::size_t c = form_.pivots[i];
        if (sgn(w[c]) == 0) continue;
        mpz_tdiv_qr(y[i].get_mpz_t(), r.get_mpz_t(), w[c].get_mpz_t(), form_.h(i, c).get_mpz_t());
        if (sgn(r) != 0) return std::nullopt;
        submul_row(w, form_.h.row(i), y[i], c);
    }
    if (std::any_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) != 0; })) {
        return std::nullopt;
    }
    // x = y * (first rank rows of U)
    IntVector x(generators_.rows());
    for (std::size_t i = 0; i < form_.rank; ++i) {
        if (sgn(y[i]) == 0) continue;
        auto urow = form_.u.row(i);
        for (std::size_t k = 0; k < x.size(); ++k) {
            mpz_addmul(x[k].get_mpz_t(), y[i].get_mpz_t(), urow[k].get_mpz_t());
        }
    }
    if (generators_.rows() == 0) return x;
    const IntVector check = row_times(x, generators_);
    if (!std::equal(check.begin(), check.end(), v.begin(), v.end())) {
        throw InvariantError("membership certificate failed to reproduce the target vector");
    }
    return x;
}

std::optional<IntVector> lattice_membership(const IntMatrix& rows, std::span<const Integer> v) {
    return LatticeSolver(rows).solve(v);
}

std::vector<IntVector> int_kernel(const IntMatrix& m) {
    const HnfResult res = hnf(m);
    std::vector<IntVector> basis;
    for (std::size_t i = res.rank; i < m.rows(); ++i) {
        auto urow = res.u.row(i);
        basis.emplace_back(urow.begin(), urow.end());
    }
    return basis;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) {
        throw ContractError("same_lattice: column counts differ (" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.cols()) + ")");
    }
    IntMatrix ha = a, hb = b;
    const std::size_t ra = hermite_reduce(ha, nullptr).size();
    const std::size_t rb = hermite_reduce(hb, nullptr).size();
    return ra == rb && nonzero_rows(ha, ra) == nonzero_rows(hb, rb);
}

bool IncrementalLattice::contains(std::span<const Integer> v) const {
    if (v.size() != dim_) throw ContractError("membership: dimension mismatch");
    IntVector w(v.begin(), v.end());
    Integer q, r;
    std::size_t k = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (sgn(w[c]) == 0) continue;
        while (k < rows_.size() && rows_[k].pivot < c) ++k;
        if (k == rows_.size() || rows_[k].pivot != c) return false;
        const auto& h = rows_[k].values;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[c].get_mpz_t(), h[c].get_mpz_t());
        if (sgn(r) != 0) return false;
        submul_row(w, h, q, c);
    }
    return true;
}

bool IncrementalLattice::insert(IntVector v) {
    if (v.size() != dim_) throw ContractError("insert: dimension mismatch");
    bool grew = false;
    Integer q, r, g, a, b, hc, vc;
    std::size_t k = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (sgn(v[c]) == 0) continue;
        while (k < rows_.size() && rows_[k].pivot < c) ++k;
        if (k == rows_.size() || rows_[k].pivot != c) {
            if (sgn(v[c]) < 0) negate_row(v);
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), Row{c, std::move(v)});
            return true;
        }
        auto& h = rows_[k].values;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[c].get_mpz_t(), h[c].get_mpz_t());
        if (sgn(r) == 0) {
            submul_row(v, h, q, c);
            continue;
        }
        // Unimodular 2x2 step: h <- a h + b v, v <- (h_c/g) v - (v_c/g) h.
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), h[c].get_mpz_t(), v[c].get_mpz_t());
        mpz_divexact(hc.get_mpz_t(), h[c].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(vc.get_mpz_t(), v[c].get_mpz_t(), g.get_mpz_t());
        for (std::size_t j = c; j < dim_; ++j) {
            Integer nh = a * h[j] + b * v[j];
            Integer nv = hc * v[j] - vc * h[j];
            h[j] = std::move(nh);
            v[j] = std::move(nv);
        }
        grew = true;
    }
    return grew;
}

bool IncrementalLattice::is_full() const {
    if (rows_.size() != dim_) return false;
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const Row& row) { return mpz_cmpabs_ui(row.values[row.pivot].get_mpz_t(), 1) == 0; });
}

}  // namespace nobeling
