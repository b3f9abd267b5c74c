#include "nobeling/cube.hpp"

#include <algorithm>
#include <map>

#include "nobeling/errors.hpp"

namespace nobeling {

namespace {

std::vector<bool> coordinate_mask(std::size_t n, const IndexSet& j) {
    std::vector<bool> keep(n, false);
    for (std::size_t i : j) {
        if (i >= n) {
            throw ContractError("ambient mismatch: coordinate " + std::to_string(i) +
                                " outside a cube of dimension " + std::to_string(n));
        }
        keep[i] = true;
    }
    return keep;
}

void require_rank(const CubeSet& s, std::size_t mu, std::size_t bound) {
    if (mu > bound) {
        throw ContractError("rank " + std::to_string(mu) + " out of range for dimension " +
                            std::to_string(s.dimension()));
    }
}

void require_domain(const FunctionOnS& f, const CubeSet& expected, const char* what) {
    if (!(f.domain() == expected)) {
        throw ContractError(std::string(what) + ": function domain does not match");
    }
}

}  // namespace

CoordinateOrder::CoordinateOrder(std::size_t n) : rank_(n), index_(n) {
    for (std::size_t i = 0; i < n; ++i) {
        rank_[i] = i;
        index_[i] = i;
    }
}

CoordinateOrder CoordinateOrder::from_ranks(std::vector<std::size_t> ranks) {
    const std::size_t n = ranks.size();
    std::vector<std::size_t> index(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ranks[i] >= n || index[ranks[i]] != n) {
            throw ContractError("coordinate order is not a permutation of 0.." +
                                std::to_string(n == 0 ? 0 : n - 1));
        }
        index[ranks[i]] = i;
    }
    CoordinateOrder order;
    order.rank_ = std::move(ranks);
    order.index_ = std::move(index);
    return order;
}

std::size_t CoordinateOrder::rank(std::size_t index) const {
    if (index >= rank_.size()) {
        throw ContractError("coordinate " + std::to_string(index) + " out of range");
    }
    return rank_[index];
}

std::size_t CoordinateOrder::index_at(std::size_t rank) const {
    if (rank >= index_.size()) {
        throw ContractError("rank " + std::to_string(rank) + " out of range");
    }
    return index_[rank];
}

bool CoordinateOrder::is_identity() const {
    for (std::size_t i = 0; i < rank_.size(); ++i) {
        if (rank_[i] != i) return false;
    }
    return true;
}

IndexSet CoordinateOrder::indices_below(std::size_t mu) const {
    IndexSet out;
    for (std::size_t r = 0; r < mu && r < index_.size(); ++r) out.push_back(index_[r]);
    std::sort(out.begin(), out.end());
    return out;
}

Point Point::parse(std::string_view text) {
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0') {
            bits.push_back(false);
        } else if (c == '1') {
            bits.push_back(true);
        } else {
            throw ParseError("invalid point '" + std::string(text) + "': expected 0/1 characters");
        }
    }
    return Point(std::move(bits));
}

Point Point::with(std::size_t i, bool value) const {
    Point out = *this;
    out.bits_[i] = value;
    return out;
}

std::string Point::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) s[i] = '1';
    }
    return s;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.size() <=> b.size();
}

CubeSet::CubeSet(CoordinateOrder order, std::vector<Point> points)
    : order_(std::move(order)), points_(std::move(points)) {
    for (const Point& x : points_) {
        if (x.size() != order_.size()) {
            throw ContractError("ambient mismatch: point '" + x.to_string() + "' has length " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(order_.size()));
        }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

CubeSet CubeSet::from_strings(CoordinateOrder order, const std::vector<std::string>& points) {
    std::vector<Point> pts;
    pts.reserve(points.size());
    for (const auto& s : points) pts.push_back(Point::parse(s));
    return CubeSet(std::move(order), std::move(pts));
}

std::optional<std::size_t> CubeSet::index_of(const Point& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    if (it == points_.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

FunctionOnS::FunctionOnS(CubeSet domain, std::vector<Integer> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.size()) {
        throw ContractError("function has " + std::to_string(values_.size()) +
                            " values for a domain of " + std::to_string(domain_.size()) +
                            " points");
    }
}

FunctionOnS FunctionOnS::zero(CubeSet domain) {
    const std::size_t m = domain.size();
    return FunctionOnS(std::move(domain), std::vector<Integer>(m));
}

FunctionOnS FunctionOnS::constant(CubeSet domain, const Integer& c) {
    const std::size_t m = domain.size();
    return FunctionOnS(std::move(domain), std::vector<Integer>(m, c));
}

FunctionOnS FunctionOnS::delta(CubeSet domain, const Point& x) {
    auto idx = domain.index_of(x);
    if (!idx) throw ContractError("delta: point '" + x.to_string() + "' not in domain");
    std::vector<Integer> values(domain.size());
    values[*idx] = 1;
    return FunctionOnS(std::move(domain), std::move(values));
}

const Integer& FunctionOnS::at(const Point& x) const {
    auto idx = domain_.index_of(x);
    if (!idx) throw ContractError("point '" + x.to_string() + "' not in function domain");
    return values_[*idx];
}

bool FunctionOnS::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Integer& v) { return v == 0; });
}

namespace {

template <typename Op>
FunctionOnS pointwise(const FunctionOnS& a, const FunctionOnS& b, Op op) {
    if (!(a.domain() == b.domain())) throw ContractError("pointwise operation on different domains");
    std::vector<Integer> values(a.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = op(a[i], b[i]);
    return FunctionOnS(a.domain(), std::move(values));
}

}  // namespace

FunctionOnS operator+(const FunctionOnS& a, const FunctionOnS& b) {
    return pointwise(a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); });
}

FunctionOnS operator-(const FunctionOnS& a, const FunctionOnS& b) {
    return pointwise(a, b, [](const Integer& x, const Integer& y) { return Integer(x - y); });
}

FunctionOnS operator*(const FunctionOnS& a, const FunctionOnS& b) {
    return pointwise(a, b, [](const Integer& x, const Integer& y) { return Integer(x * y); });
}

FunctionOnS operator*(const Integer& c, const FunctionOnS& f) {
    std::vector<Integer> values(f.values().begin(), f.values().end());
    for (auto& v : values) v *= c;
    return FunctionOnS(f.domain(), std::move(values));
}

bool FunctionOnS::operator==(const FunctionOnS& other) const {
    return domain_ == other.domain_ && values_ == other.values_;
}

Point project_point(const Point& x, const std::vector<bool>& keep) {
    std::vector<bool> bits(x.size(), false);
    for (std::size_t i = 0; i < x.size(); ++i) bits[i] = keep[i] && x[i];
    return Point(std::move(bits));
}

CubeSet proj_set(const CubeSet& s, const IndexSet& j) {
    const auto keep = coordinate_mask(s.dimension(), j);
    std::vector<Point> pts;
    pts.reserve(s.size());
    for (const Point& x : s.points()) pts.push_back(project_point(x, keep));
    return CubeSet(s.order(), std::move(pts));
}

CubeSet proj_below(const CubeSet& s, std::size_t mu) {
    require_rank(s, mu, s.dimension());
    return proj_set(s, s.order().indices_below(mu));
}

FunctionOnS pullback(const CubeSet& s, const IndexSet& j, const FunctionOnS& f) {
    const auto keep = coordinate_mask(s.dimension(), j);
    require_domain(f, proj_set(s, j), "pullback");
    std::vector<Integer> values;
    values.reserve(s.size());
    for (const Point& x : s.points()) values.push_back(f.at(project_point(x, keep)));
    return FunctionOnS(s, std::move(values));
}

bool contained_check(const CubeSet& s, std::size_t mu) {
    require_rank(s, mu, s.dimension());
    const auto& order = s.order();
    for (const Point& x : s.points()) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] && order.rank(i) >= mu) return false;
        }
    }
    return true;
}

SuccessorSplit split_succ(const CubeSet& s, std::size_t mu) {
    if (mu >= s.dimension()) {
        throw ContractError("split_succ: rank " + std::to_string(mu) + " >= dimension " +
                            std::to_string(s.dimension()));
    }
    const auto& order = s.order();
    const std::size_t coord = order.index_at(mu);
    std::vector<Point> lower, upper;
    for (const Point& x : s.points()) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] && order.rank(i) > mu) {
                throw ContractError("split_succ: point '" + x.to_string() +
                                    "' has a coordinate of rank > " + std::to_string(mu) +
                                    " set");
            }
        }
        (x[coord] ? upper : lower).push_back(x);
    }
    SuccessorSplit out{CubeSet(order, std::move(lower)), CubeSet(order, std::move(upper)),
                       CubeSet(order)};
    // pi_mu on S1 only clears the rank-mu coordinate, since nothing above it is set.
    std::vector<Point> prime;
    for (const Point& x : out.lower.points()) {
        if (out.upper.contains(x.with(coord, true))) prime.push_back(x);
    }
    out.prime = CubeSet(order, std::move(prime));
    return out;
}

FunctionOnS g_map(const CubeSet& s, std::size_t mu, const FunctionOnS& f) {
    require_domain(f, s, "g_map");
    const auto split = split_succ(s, mu);
    const std::size_t coord = s.order().index_at(mu);
    std::vector<Integer> values;
    values.reserve(split.prime.size());
    for (const Point& x : split.prime.points()) {
        const Point swapped = x.with(coord, true);
        auto hi = s.index_of(swapped);
        auto lo = s.index_of(x);
        if (!hi || !lo) {
            throw InvariantError("g_map: S' is not contained in pi_mu(S1) at point '" +
                                 x.to_string() + "'");
        }
        values.push_back(f[*hi] - f[*lo]);
    }
    return FunctionOnS(split.prime, std::move(values));
}

std::optional<FunctionOnS> factors_through(const CubeSet& s, const FunctionOnS& f,
                                           const IndexSet& j) {
    require_domain(f, s, "factors_through");
    const auto keep = coordinate_mask(s.dimension(), j);
    std::map<Point, Integer> image;
    for (std::size_t k = 0; k < s.size(); ++k) {
        Point y = project_point(s.points()[k], keep);
        auto [it, inserted] = image.emplace(std::move(y), f[k]);
        if (!inserted && it->second != f[k]) return std::nullopt;
    }
    std::vector<Point> pts;
    std::vector<Integer> values;
    for (auto& [y, v] : image) {
        pts.push_back(y);
        values.push_back(v);
    }
    // std::map iterates in point order, which is the canonical CubeSet order.
    return FunctionOnS(CubeSet(s.order(), std::move(pts)), std::move(values));
}

IndexSet greedy_factoring_set(const CubeSet& s, const FunctionOnS& f) {
    const auto& order = s.order();
    std::vector<bool> keep(s.dimension(), true);
    auto as_set = [&keep] {
        IndexSet j;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (keep[i]) j.push_back(i);
        }
        return j;
    };
    for (std::size_t r = s.dimension(); r-- > 0;) {
        const std::size_t i = order.index_at(r);
        keep[i] = false;
        if (!factors_through(s, f, as_set())) keep[i] = true;
    }
    return as_set();
}

}  // namespace nobeling
