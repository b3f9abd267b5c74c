#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace nobeling {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t k);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    // Keeps the first k rows.
    IntMatrix top_rows(std::size_t k) const;
    void append_row(std::span<const Integer> values);

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// x * M for a row vector x.
IntVector row_times(std::span<const Integer> x, const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Row-style Hermite normal form: U * M = H, U unimodular, H in row echelon
// form with positive pivots, entries above a pivot reduced into [0, pivot).
// Zero rows of H come last.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

HnfResult hnf(const IntMatrix& m);

// H alone, without the transform.
IntMatrix hnf_form(const IntMatrix& m);

std::size_t int_rank(const IntMatrix& m);

// Reusable solver for x * rows = v against a fixed set of generators.
class LatticeSolver {
public:
    explicit LatticeSolver(const IntMatrix& generators);

    std::size_t dimension() const { return cols_; }
    std::size_t generator_count() const { return generators_.rows(); }

    // Integer coefficients x with x * generators = v, verified exactly, or
    // nullopt when v is outside the row lattice.
    std::optional<IntVector> solve(std::span<const Integer> v) const;

private:
    IntMatrix generators_;
    HnfResult form_;
    std::size_t cols_;
};

std::optional<IntVector> lattice_membership(const IntMatrix& rows, std::span<const Integer> v);

// Basis of the left kernel { x | x * M = 0 }; size is rows - rank.
std::vector<IntVector> int_kernel(const IntMatrix& m);

// Equality of row lattices, via canonical HNF with zero rows dropped.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

// Echelon basis of a growing row lattice. Used where generators arrive one
// at a time and membership is queried in between.
class IncrementalLattice {
public:
    explicit IncrementalLattice(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    bool contains(std::span<const Integer> v) const;

    // Adds v to the generators. Returns true iff the lattice grew.
    bool insert(IntVector v);

    // True iff the lattice is all of Z^dimension.
    bool is_full() const;

private:
    struct Row {
        std::size_t pivot;
        IntVector values;
    };

    std::size_t dim_;
    std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace nobeling
