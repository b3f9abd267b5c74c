#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nobeling {

using Integer = mpz_class;

// A set of coordinate indices. Order and duplicates are irrelevant.
using IndexSet = std::vector<std::size_t>;

// Linear order on the coordinates {0..n-1}, stored as the rank of each index.
// Bits of a point never move when the order changes; only projections below a
// rank and the product order consult it.
class CoordinateOrder {
public:
    CoordinateOrder() = default;
    explicit CoordinateOrder(std::size_t n);

    // ranks[i] is the order-rank of coordinate i; must be a permutation.
    static CoordinateOrder from_ranks(std::vector<std::size_t> ranks);

    std::size_t size() const { return rank_.size(); }
    std::size_t rank(std::size_t index) const;
    std::size_t index_at(std::size_t rank) const;
    std::span<const std::size_t> ranks() const { return rank_; }
    bool is_identity() const;

    // Coordinates whose rank is < mu.
    IndexSet indices_below(std::size_t mu) const;

    bool operator==(const CoordinateOrder&) const = default;

private:
    std::vector<std::size_t> rank_;
    std::vector<std::size_t> index_;
};

// A point of {0,1}^n, coordinate 0 first.
class Point {
public:
    Point() = default;
    explicit Point(std::size_t n) : bits_(n, false) {}
    explicit Point(std::vector<bool> bits) : bits_(std::move(bits)) {}

    // "0110" -> coordinates (0,1,1,0). Throws ParseError on other characters.
    static Point parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    Point with(std::size_t i, bool value) const;
    std::string to_string() const;

    friend bool operator==(const Point&, const Point&) = default;
    friend std::strong_ordering operator<=>(const Point& a, const Point& b);

private:
    std::vector<bool> bits_;
};

// A finite (hence closed) subset of {0,1}^n with a coordinate order.
// Points are kept sorted lexicographically and duplicate-free.
class CubeSet {
public:
    CubeSet() = default;
    explicit CubeSet(CoordinateOrder order) : order_(std::move(order)) {}
    CubeSet(CoordinateOrder order, std::vector<Point> points);

    static CubeSet from_strings(CoordinateOrder order, const std::vector<std::string>& points);

    const CoordinateOrder& order() const { return order_; }
    std::size_t dimension() const { return order_.size(); }
    std::span<const Point> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    std::optional<std::size_t> index_of(const Point& x) const;
    bool contains(const Point& x) const { return index_of(x).has_value(); }

    bool operator==(const CubeSet&) const = default;

private:
    CoordinateOrder order_;
    std::vector<Point> points_;
};

// An integer-valued function on a CubeSet, values aligned with the point order.
class FunctionOnS {
public:
    FunctionOnS() = default;
    FunctionOnS(CubeSet domain, std::vector<Integer> values);

    static FunctionOnS zero(CubeSet domain);
    static FunctionOnS constant(CubeSet domain, const Integer& c);
    static FunctionOnS delta(CubeSet domain, const Point& x);

    const CubeSet& domain() const { return domain_; }
    std::span<const Integer> values() const { return values_; }
    const Integer& operator[](std::size_t i) const { return values_[i]; }
    const Integer& at(const Point& x) const;
    bool is_zero() const;

    friend FunctionOnS operator+(const FunctionOnS& a, const FunctionOnS& b);
    friend FunctionOnS operator-(const FunctionOnS& a, const FunctionOnS& b);
    // Pointwise product.
    friend FunctionOnS operator*(const FunctionOnS& a, const FunctionOnS& b);
    friend FunctionOnS operator*(const Integer& c, const FunctionOnS& f);

    bool operator==(const FunctionOnS& other) const;

private:
    CubeSet domain_;
    std::vector<Integer> values_;
};

// Zero every coordinate outside J.
Point project_point(const Point& x, const std::vector<bool>& keep);

// pi_J(S).
CubeSet proj_set(const CubeSet& s, const IndexSet& j);

// pi_mu(S): keep the coordinates of rank < mu.
CubeSet proj_below(const CubeSet& s, std::size_t mu);

// f o pi_J, where f lives on proj_set(S, J).
FunctionOnS pullback(const CubeSet& s, const IndexSet& j, const FunctionOnS& f);

// True iff x_i = 1 implies rank(i) < mu for every x in S.
bool contained_check(const CubeSet& s, std::size_t mu);

struct SuccessorSplit {
    CubeSet lower;   // x_mu = 0
    CubeSet upper;   // x_mu = 1
    CubeSet prime;   // lower ∩ pi_mu(upper)
};

// Requires contained_check(S, mu + 1) and mu < n.
SuccessorSplit split_succ(const CubeSet& s, std::size_t mu);

// g(f)(x) = f(x with the rank-mu coordinate set to 1) - f(x) on S'.
FunctionOnS g_map(const CubeSet& s, std::size_t mu, const FunctionOnS& f);

// The unique h on proj_set(S, J) with pullback(h) = f, if f factors.
std::optional<FunctionOnS> factors_through(const CubeSet& s, const FunctionOnS& f,
                                           const IndexSet& j);

// Drops ranks from highest to lowest while f keeps factoring. The result
// depends on the coordinate order and is not a canonical minimum.
IndexSet greedy_factoring_set(const CubeSet& s, const FunctionOnS& f);

}  // namespace nobeling
