#include "nobeling/basis.hpp"

#include <algorithm>
#include <cstdint>

namespace nobeling {

namespace {

void check_caps(const CubeSet& s, const Caps& caps) {
    if (s.dimension() > caps.max_n) {
        throw ResourceError("dimension " + std::to_string(s.dimension()) + " exceeds the cap of " +
                            std::to_string(caps.max_n));
    }
    if (s.size() > caps.max_points) {
        throw ResourceError(std::to_string(s.size()) + " points exceed the cap of " +
                            std::to_string(caps.max_points));
    }
}

std::vector<Product> recursive_basis(const CubeSet& s, std::size_t top) {
    if (s.empty()) return {};
    if (top == 0) {
        // Every point is zero, so S is a singleton and E(S) = { [] }.
        if (s.size() != 1) throw InvariantError("rank-0 space with more than one point");
        return {Product()};
    }
    const std::size_t mu = top - 1;
    const std::size_t coord = s.order().index_at(mu);
    const bool uses_mu = std::any_of(s.points().begin(), s.points().end(),
                                     [coord](const Point& x) { return x[coord]; });
    if (!uses_mu) return recursive_basis(s, mu);

    const SuccessorSplit split = split_succ(s, mu);
    std::vector<Product> out = recursive_basis(proj_below(s, mu), mu);
    // Every product headed by mu sorts after every product over lower ranks.
    for (const Product& q : recursive_basis(split.prime, mu)) {
        out.push_back(cons(s.order(), coord, q));
    }
    return out;
}

}  // namespace

std::string to_string(Method m) { return m == Method::greedy ? "greedy" : "recursive"; }

bool GoodBasis::contains(const Product& p) const {
    return std::find(products.begin(), products.end(), p) != products.end();
}

IntMatrix evaluation_matrix(const CubeSet& s, const std::vector<Product>& products) {
    IntMatrix m(products.size(), s.size());
    for (std::size_t r = 0; r < products.size(); ++r) {
        const FunctionOnS f = eval(s, products[r]);
        std::copy(f.values().begin(), f.values().end(), m.row(r).begin());
    }
    return m;
}

GoodBasis good_products_greedy(const CubeSet& s, const Caps& caps) {
    check_caps(s, caps);
    const auto& order = s.order();
    const std::size_t n = s.dimension();
    if (n >= 63) throw ResourceError("greedy enumeration needs fewer than 63 coordinates");
    GoodBasis basis{s, {}, Method::greedy};
    if (s.empty()) return basis;

    // Bit r of a point mask is the coordinate of rank r.
    std::vector<std::uint64_t> point_masks;
    point_masks.reserve(s.size());
    std::uint64_t support = 0;
    for (const Point& x : s.points()) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i]) mask |= std::uint64_t{1} << order.rank(i);
        }
        point_masks.push_back(mask);
        support |= mask;
    }

    IncrementalLattice span(s.size());
    IntVector v(s.size());
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t p = 0; p < end; ++p) {
        // A coordinate that is zero on all of S makes the evaluation zero.
        if ((p & ~support) != 0) continue;
        bool nonzero = false;
        for (std::size_t k = 0; k < s.size(); ++k) {
            const bool hit = (point_masks[k] & p) == p;
            v[k] = hit ? 1 : 0;
            nonzero = nonzero || hit;
        }
        if (!nonzero || span.contains(v)) continue;
        span.insert(v);
        basis.products.push_back(product_from_mask(order, p));
        // Once the span is all of Z^|S| no later product can be good.
        if (span.is_full()) break;
    }
    return basis;
}

GoodBasis good_products_recursive(const CubeSet& s, const Caps& caps) {
    check_caps(s, caps);
    if (!contained_check(s, s.dimension())) {
        throw InvariantError("space uses a rank outside the ambient order");
    }
    return GoodBasis{s, recursive_basis(s, s.dimension()), Method::recursive};
}

GoodBasis compute_basis(const CubeSet& s, Method method, const Caps& caps) {
    return method == Method::greedy ? good_products_greedy(s, caps)
                                    : good_products_recursive(s, caps);
}

bool has_basis_property(const GoodBasis& basis) {
    if (basis.products.size() != basis.space.size()) return false;
    return hnf_form(evaluation_matrix(basis.space, basis.products)) ==
           IntMatrix::identity(basis.space.size());
}

const Integer& Decomposition::coefficient(const Product& p) const {
    static const Integer zero = 0;
    for (std::size_t k = 0; k < basis.products.size(); ++k) {
        if (basis.products[k] == p) return coefficients[k];
    }
    return zero;
}

FunctionOnS Decomposition::evaluate() const {
    FunctionOnS total = FunctionOnS::zero(basis.space);
    for (std::size_t k = 0; k < basis.products.size(); ++k) {
        if (coefficients[k] == 0) continue;
        total = total + coefficients[k] * eval(basis.space, basis.products[k]);
    }
    return total;
}

Decomposer::Decomposer(GoodBasis basis)
    : basis_(std::move(basis)),
      rows_(evaluation_matrix(basis_.space, basis_.products)),
      solver_(rows_) {}

Decomposition Decomposer::operator()(const FunctionOnS& f) const {
    if (!(f.domain() == basis_.space)) {
        throw ContractError("decompose: function domain differs from the basis space");
    }
    auto x = solver_.solve(f.values());
    if (!x) {
        throw InvariantError("decompose: function is outside the span of the good products");
    }
    Decomposition d{basis_, std::move(*x)};
    if (!(d.evaluate() == f)) {
        throw InvariantError("decompose: reconstruction differs from the input function");
    }
    return d;
}

Decomposition decompose(const GoodBasis& basis, const FunctionOnS& f) {
    return Decomposer(basis)(f);
}

std::vector<SignedProduct> delta_expansion(const CubeSet& s_j, const Point& x, const IndexSet& j) {
    const std::size_t n = s_j.dimension();
    std::vector<bool> in_j(n, false);
    for (std::size_t i : j) {
        if (i >= n) throw ContractError("delta_expansion: coordinate outside the cube");
        in_j[i] = true;
    }
    if (!s_j.contains(x)) {
        throw ContractError("delta_expansion: point '" + x.to_string() + "' not in the space");
    }
    for (const Point& y : s_j.points()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] && !in_j[i]) {
                throw ContractError("delta_expansion: space not supported on J (point '" +
                                    y.to_string() + "')");
            }
        }
    }
    IndexSet ones, zeros;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_j[i]) continue;
        (x[i] ? ones : zeros).push_back(i);
    }
    if (zeros.size() >= 63) throw ResourceError("delta_expansion: too many terms");
    const auto& order = s_j.order();
    std::vector<SignedProduct> terms;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << zeros.size()); ++t) {
        IndexSet entries = ones;
        int sign = 1;
        for (std::size_t b = 0; b < zeros.size(); ++b) {
            if (t >> b & 1U) {
                entries.push_back(zeros[b]);
                sign = -sign;
            }
        }
        terms.push_back({sign, Product::from_set(order, entries)});
    }
    std::sort(terms.begin(), terms.end(), [&order](const SignedProduct& a, const SignedProduct& b) {
        return lex_compare(order, a.product, b.product) == std::strong_ordering::less;
    });
    return terms;
}

FunctionOnS evaluate_combination(const CubeSet& s, const std::vector<SignedProduct>& terms) {
    FunctionOnS total = FunctionOnS::zero(s);
    for (const auto& t : terms) total = total + Integer(t.sign) * eval(s, t.product);
    return total;
}

}  // namespace nobeling
