#include "nobeling/products.hpp"

#include <algorithm>

#include "nobeling/zlattice.hpp"

namespace nobeling {

Product::Product(const CoordinateOrder& order, std::vector<std::size_t> entries)
    : entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] >= order.size()) {
            throw ContractError("product entry " + std::to_string(entries_[k]) +
                                " outside a cube of dimension " + std::to_string(order.size()));
        }
        if (k > 0 && order.rank(entries_[k - 1]) <= order.rank(entries_[k])) {
            throw ContractError("product " + to_string() + " is not strictly decreasing in rank");
        }
    }
}

Product Product::from_set(const CoordinateOrder& order, const IndexSet& coordinates) {
    std::vector<std::size_t> entries = coordinates;
    for (std::size_t i : entries) order.rank(i);  // range check
    std::sort(entries.begin(), entries.end(),
              [&](std::size_t a, std::size_t b) { return order.rank(a) > order.rank(b); });
    return Product(order, std::move(entries));
}

std::size_t Product::head() const {
    if (entries_.empty()) throw ContractError("head of the empty product");
    return entries_.front();
}

bool Product::contains(std::size_t index) const {
    return std::find(entries_.begin(), entries_.end(), index) != entries_.end();
}

std::string Product::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(entries_[k]);
    }
    return s + "]";
}

std::strong_ordering lex_compare(const CoordinateOrder& order, const Product& p, const Product& q) {
    const auto& a = p.entries();
    const auto& b = q.entries();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto c = order.rank(a[k]) <=> order.rank(b[k]);
        if (c != 0) return c;
    }
    return a.size() <=> b.size();
}

std::uint64_t rank_mask(const CoordinateOrder& order, const Product& p) {
    std::uint64_t mask = 0;
    for (std::size_t i : p.entries()) {
        const std::size_t r = order.rank(i);
        if (r >= 64) throw ResourceError("rank mask needs at most 64 coordinates");
        mask |= std::uint64_t{1} << r;
    }
    return mask;
}

Product product_from_mask(const CoordinateOrder& order, std::uint64_t mask) {
    std::vector<std::size_t> entries;
    for (std::size_t r = std::min<std::size_t>(order.size(), 64); r-- > 0;) {
        if (mask >> r & 1U) entries.push_back(order.index_at(r));
    }
    return Product(order, std::move(entries));
}

std::vector<Product> enumerate_products(const CoordinateOrder& order, std::size_t max_n) {
    const std::size_t n = order.size();
    if (n > max_n || n >= 63) {
        throw ResourceError("product enumeration over " + std::to_string(n) +
                            " coordinates exceeds the cap of " + std::to_string(max_n));
    }
    // Increasing rank masks enumerate P in lexicographic order: a product
    // with head rank h follows every product over ranks < h.
    std::vector<Product> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        out.push_back(product_from_mask(order, mask));
    }
    return out;
}

Product tail(const Product& p) {
    if (p.empty()) throw ContractError("tail of the empty product");
    // Strict decrease is inherited from p.
    return Product(Product::Unchecked{},
                   std::vector<std::size_t>(p.entries().begin() + 1, p.entries().end()));
}

Product cons(const CoordinateOrder& order, std::size_t index, const Product& q) {
    std::vector<std::size_t> entries;
    entries.reserve(q.size() + 1);
    entries.push_back(index);
    entries.insert(entries.end(), q.entries().begin(), q.entries().end());
    if (!q.empty() && order.rank(index) <= order.rank(q.head())) {
        throw ContractError("cons: coordinate " + std::to_string(index) +
                            " does not exceed the head of " + q.to_string());
    }
    return Product(order, std::move(entries));
}

FunctionOnS eval(const CubeSet& s, const Product& p) {
    for (std::size_t i : p.entries()) {
        if (i >= s.dimension()) {
            throw ContractError("eval: product " + p.to_string() + " outside the ambient cube");
        }
    }
    std::vector<Integer> values;
    values.reserve(s.size());
    for (const Point& x : s.points()) {
        const bool all_set = std::all_of(p.entries().begin(), p.entries().end(),
                                         [&x](std::size_t i) { return x[i]; });
        values.emplace_back(all_set ? 1 : 0);
    }
    return FunctionOnS(s, std::move(values));
}

bool is_good_definitional(const CubeSet& s, const Product& p, const Caps& caps) {
    const auto& order = s.order();
    if (order.size() > caps.max_oracle_n) {
        throw ResourceError("definitional goodness oracle limited to n <= " +
                            std::to_string(caps.max_oracle_n));
    }
    IntMatrix smaller(0, s.size());
    for (const Product& q : enumerate_products(order, caps.max_oracle_n)) {
        if (lex_compare(order, q, p) != std::strong_ordering::less) continue;
        smaller.append_row(eval(s, q).values());
    }
    return !lattice_membership(smaller, eval(s, p).values()).has_value();
}

}  // namespace nobeling
