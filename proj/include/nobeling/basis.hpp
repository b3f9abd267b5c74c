#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nobeling/cube.hpp"
#include "nobeling/errors.hpp"
#include "nobeling/products.hpp"
#include "nobeling/zlattice.hpp"

namespace nobeling {

enum class Method { greedy, recursive };

std::string to_string(Method m);

// The good products E(S), sorted lexicographically.
struct GoodBasis {
    CubeSet space;
    std::vector<Product> products;
    Method method = Method::greedy;

    const CoordinateOrder& order() const { return space.order(); }
    bool contains(const Product& p) const;
};

// Rows are eval(S, p) for each p, in the given order.
IntMatrix evaluation_matrix(const CubeSet& s, const std::vector<Product>& products);

// Walks P in increasing order and keeps p when eval(S, p) is outside the span
// of the evaluations kept so far.
GoodBasis good_products_greedy(const CubeSet& s, const Caps& caps = {});

// Structural recursion on the top rank: E(S) = E(S_mu) ∪ { mu :: q | q ∈ E(S') }.
// Uses no lattice arithmetic.
GoodBasis good_products_recursive(const CubeSet& s, const Caps& caps = {});

GoodBasis compute_basis(const CubeSet& s, Method method, const Caps& caps = {});

// True iff the HNF of the evaluation matrix is the identity of size |S|:
// the evaluations are simultaneously independent and spanning.
bool has_basis_property(const GoodBasis& basis);

struct Decomposition {
    GoodBasis basis;
    std::vector<Integer> coefficients;  // aligned with basis.products

    const Integer& coefficient(const Product& p) const;
    FunctionOnS evaluate() const;
};

// Solves against a fixed basis many times.
class Decomposer {
public:
    explicit Decomposer(GoodBasis basis);

    // Throws InvariantError if f is not an exact combination of the basis.
    Decomposition operator()(const FunctionOnS& f) const;

    const GoodBasis& basis() const { return basis_; }

private:
    GoodBasis basis_;
    IntMatrix rows_;
    LatticeSolver solver_;
};

Decomposition decompose(const GoodBasis& basis, const FunctionOnS& f);

struct SignedProduct {
    int sign = 1;
    Product product;

    bool operator==(const SignedProduct&) const = default;
};

// Inclusion-exclusion expansion of the Kronecker delta at x on a space
// supported on J: prod_{i in A} e_i * prod_{i in B} (1 - e_i) with A the
// coordinates of J set in x and B the rest of J. Terms are sorted by product.
std::vector<SignedProduct> delta_expansion(const CubeSet& s_j, const Point& x, const IndexSet& j);

FunctionOnS evaluate_combination(const CubeSet& s, const std::vector<SignedProduct>& terms);

}  // namespace nobeling
