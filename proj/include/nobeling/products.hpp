#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "nobeling/cube.hpp"
#include "nobeling/errors.hpp"

namespace nobeling {

// A finite sequence of coordinate indices, strictly decreasing in rank.
// Equality is structural; ordering needs the ambient CoordinateOrder.
class Product {
public:
    Product() = default;

    // Validates strict decrease under `order`; throws ContractError otherwise.
    Product(const CoordinateOrder& order, std::vector<std::size_t> entries);

    // Sorts an arbitrary set of distinct coordinates into decreasing rank.
    static Product from_set(const CoordinateOrder& order, const IndexSet& coordinates);

    const std::vector<std::size_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::size_t head() const;
    bool contains(std::size_t index) const;

    // "[1,0]"
    std::string to_string() const;

    bool operator==(const Product&) const = default;

private:
    struct Unchecked {};
    Product(Unchecked, std::vector<std::size_t> entries) : entries_(std::move(entries)) {}
    friend Product tail(const Product& p);

    std::vector<std::size_t> entries_;
};

// List-lexicographic comparison; entries compare by rank, the empty product is least.
std::strong_ordering lex_compare(const CoordinateOrder& order, const Product& p, const Product& q);

// Comparator for std::sort and friends.
struct LexLess {
    const CoordinateOrder* order;
    bool operator()(const Product& p, const Product& q) const {
        return lex_compare(*order, p, q) == std::strong_ordering::less;
    }
};

// Every product for the order, ascending. Throws ResourceError when n > max_n.
std::vector<Product> enumerate_products(const CoordinateOrder& order, std::size_t max_n = 20);

// Rank mask of a product: bit r is set iff the coordinate of rank r occurs.
// Masks sort in the same order as lex_compare.
std::uint64_t rank_mask(const CoordinateOrder& order, const Product& p);
Product product_from_mask(const CoordinateOrder& order, std::uint64_t mask);

Product tail(const Product& p);
Product cons(const CoordinateOrder& order, std::size_t index, const Product& q);

// ev_S(p)(x) = 1 iff x_i = 1 for every i in p.
FunctionOnS eval(const CubeSet& s, const Product& p);

// Oracle: p is good iff eval(S, p) is outside the integer span of eval(S, q)
// over ALL q < p. Enumerates P; intended for small n only.
bool is_good_definitional(const CubeSet& s, const Product& p, const Caps& caps = {});

}  // namespace nobeling
