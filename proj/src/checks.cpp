#include "nobeling/checks.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "nobeling/random.hpp"

namespace nobeling {

namespace {

bool contains_product(const std::vector<Product>& set, const Product& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

bool is_subset(const std::vector<Product>& a, const std::vector<Product>& b) {
    return std::all_of(a.begin(), a.end(), [&b](const Product& p) { return contains_product(b, p); });
}

CheckEntry entry(std::string name, std::string lemma) {
    return CheckEntry{std::move(name), std::move(lemma), true, ""};
}

void fail(CheckEntry& e, const std::string& why) {
    if (e.pass) {
        e.pass = false;
        e.detail = why;
    }
}

GoodBasis corrupt(GoodBasis basis) {
    if (basis.products.empty()) {
        basis.products.push_back(Product());
        return basis;
    }
    const auto all = enumerate_products(basis.order(), 62);
    auto outsider = std::find_if(all.begin(), all.end(),
                                 [&basis](const Product& p) { return !basis.contains(p); });
    if (outsider == all.end()) {
        basis.products.pop_back();
    } else {
        basis.products.back() = *outsider;
        std::sort(basis.products.begin(), basis.products.end(), LexLess{&basis.order()});
    }
    return basis;
}

}  // namespace

IntMatrix pullback_matrix(const CubeSet& s, std::size_t mu) {
    const CubeSet below = proj_below(s, mu);
    const IndexSet j = s.order().indices_below(mu);
    std::vector<bool> keep(s.dimension(), false);
    for (std::size_t i : j) keep[i] = true;
    IntMatrix m(below.size(), s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const auto row = below.index_of(project_point(s.points()[k], keep));
        m(*row, k) = 1;
    }
    return m;
}

IntMatrix g_matrix(const CubeSet& s, std::size_t mu) {
    const SuccessorSplit split = split_succ(s, mu);
    const std::size_t coord = s.order().index_at(mu);
    IntMatrix m(s.size(), split.prime.size());
    for (std::size_t j = 0; j < split.prime.size(); ++j) {
        const Point& y = split.prime.points()[j];
        const auto hi = s.index_of(y.with(coord, true));
        const auto lo = s.index_of(y);
        if (!hi || !lo) throw InvariantError("g: S' not contained in pi_mu(S1)");
        m(*hi, j) += 1;
        m(*lo, j) -= 1;
    }
    return m;
}

ExactnessReport check_exactness(const CubeSet& s, std::size_t mu) {
    ExactnessReport r;
    r.mu = mu;
    const IntMatrix image = pullback_matrix(s, mu);
    const IntMatrix g = g_matrix(s, mu);
    r.image_rank = int_rank(image);
    r.injective = r.image_rank == image.rows();
    r.composite_zero = (image * g).is_zero();
    const auto kernel = int_kernel(g);
    r.kernel_rank = kernel.size();
    r.image_equals_kernel = same_lattice(image, IntMatrix::from_rows(kernel, s.size()));
    return r;
}

TailReport check_tail_identities(const CubeSet& s, std::size_t mu, const Caps& caps) {
    TailReport r;
    r.mu = mu;
    const auto& order = s.order();
    const SuccessorSplit split = split_succ(s, mu);
    const std::size_t coord = order.index_at(mu);
    const GoodBasis full = good_products_greedy(s, caps);
    const GoodBasis below = good_products_greedy(proj_below(s, mu), caps);
    const GoodBasis prime = good_products_greedy(split.prime, caps);
    r.below = below.products.size();
    r.prime = prime.products.size();

    for (const Product& p : full.products) {
        if (!p.empty() && p.head() == coord) {
            ++r.headed;
            if (!(g_map(s, mu, eval(s, p)) == eval(split.prime, tail(p)))) {
                r.failures.push_back("g(ev " + p.to_string() + ") != ev_S'(tail)");
            }
            if (!prime.contains(tail(p))) {
                r.failures.push_back("tail of " + p.to_string() + " not good for S'");
            }
        } else if (!below.contains(p)) {
            r.failures.push_back(p.to_string() + " good for S but not for S_mu");
        }
    }
    for (const Product& q : below.products) {
        if (!full.contains(q)) r.failures.push_back(q.to_string() + " good for S_mu but not for S");
    }
    for (const Product& q : prime.products) {
        if (!full.contains(cons(order, coord, q))) {
            r.failures.push_back("mu::" + q.to_string() + " not good for S");
        }
    }
    if (full.products.size() != r.below + r.prime) {
        r.failures.push_back("|E(S)| != |E(S_mu)| + |E(S')|");
    }
    // The evaluation identity holds for every product headed by mu, good or not.
    if (s.dimension() <= 6) {
        for (const Product& q : enumerate_products(order, 6)) {
            if (!q.empty() && order.rank(q.head()) >= mu) continue;
            const Product p = cons(order, coord, q);
            if (!(g_map(s, mu, eval(s, p)) == eval(split.prime, q))) {
                r.failures.push_back("g(ev " + p.to_string() + ") != ev_S'(" + q.to_string() + ")");
            }
        }
    }
    return r;
}

Filtration prefix_filtration(const CubeSet& s, Method method, const Caps& caps) {
    Filtration f;
    const auto& order = s.order();
    for (std::size_t mu = 0; mu <= s.dimension(); ++mu) {
        f.stages.push_back({mu, compute_basis(proj_below(s, mu), method, caps).products});
    }
    f.monotone = true;
    f.new_elements_headed = true;
    for (std::size_t k = 1; k < f.stages.size(); ++k) {
        const auto& prev = f.stages[k - 1].basis;
        const auto& cur = f.stages[k].basis;
        if (!is_subset(prev, cur)) f.monotone = false;
        for (const Product& p : cur) {
            if (contains_product(prev, p)) continue;
            if (p.empty() || p.head() != order.index_at(k - 1)) f.new_elements_headed = false;
        }
    }
    const Method other = method == Method::greedy ? Method::recursive : Method::greedy;
    f.terminal_matches = f.stages.back().basis == compute_basis(s, other, caps).products;
    return f;
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

VerificationReport run_verification(const CubeSet& s, const VerifyOptions& options) {
    const Caps& caps = options.caps;
    const auto& order = s.order();
    const std::size_t n = s.dimension();
    const GoodBasis greedy = good_products_greedy(s, caps);
    const GoodBasis recursive = good_products_recursive(s, caps);
    const GoodBasis candidate = options.inject_fault ? corrupt(greedy) : greedy;
    const bool small = n <= options.small_n;

    std::vector<std::function<CheckEntry()>> tasks;

    tasks.emplace_back([&] {
        auto e = entry("basis_property", "Nobeling: E(S) is a Z-basis of C(S,Z)");
        if (candidate.products.size() != s.size()) {
            fail(e, "|E(S)| = " + std::to_string(candidate.products.size()) + " but |S| = " +
                        std::to_string(s.size()));
        } else if (!has_basis_property(candidate)) {
            fail(e, "HNF of the evaluation matrix is not the identity");
        }
        if (e.pass) e.detail = "|E(S)| = |S| = " + std::to_string(s.size());
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("algorithms_agree", "GoodProducts.union_succ (recursive = greedy)");
        if (candidate.products != recursive.products) fail(e, "greedy and recursive bases differ");
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("eval_eq", "Products.eval_eq");
        std::vector<FunctionOnS> coordinate;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Integer> v;
            for (const Point& x : s.points()) v.emplace_back(x[i] ? 1 : 0);
            coordinate.emplace_back(s, std::move(v));
        }
        const auto products = n <= caps.max_oracle_n ? enumerate_products(order, caps.max_oracle_n)
                                                     : candidate.products;
        for (const Product& p : products) {
            FunctionOnS direct = FunctionOnS::constant(s, 1);
            for (std::size_t i : p.entries()) direct = direct * coordinate[i];
            if (!(direct == eval(s, p))) fail(e, "indicator formula fails for " + p.to_string());
        }
        e.detail = e.pass ? std::to_string(products.size()) + " products" : e.detail;
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("eval_fac_prop", "Products.evalFacProp");
        for (const Product& p : candidate.products) {
            std::vector<IndexSet> supports{p.entries()};
            if (!p.empty()) supports.push_back(order.indices_below(order.rank(p.head()) + 1));
            for (const IndexSet& j : supports) {
                const CubeSet sj = proj_set(s, j);
                if (!(pullback(s, j, eval(sj, p)) == eval(s, p))) {
                    fail(e, "pullback of ev_{S_J}(" + p.to_string() + ") differs");
                }
            }
        }
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("succ_exact", "succ_exact");
        for (std::size_t mu = 0; mu < n; ++mu) {
            const auto r = check_exactness(proj_below(s, mu + 1), mu);
            if (!r.pass()) fail(e, "sequence not exact at mu = " + std::to_string(mu));
        }
        if (e.pass) e.detail = std::to_string(n) + " successor ranks";
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("tail_identities", "Products.max_eq_eval, tail lemma, GoodProducts.union_succ");
        for (std::size_t mu = 0; mu < n; ++mu) {
            const auto r = check_tail_identities(proj_below(s, mu + 1), mu, caps);
            if (!r.pass()) fail(e, "mu = " + std::to_string(mu) + ": " + r.failures.front());
        }
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("good_mono", "good_mono, Products.limitOrdinal");
        const auto f = prefix_filtration(s, Method::greedy, caps);
        if (!f.monotone) fail(e, "filtration is not inclusion-increasing");
        if (!f.new_elements_headed) fail(e, "a new stage element does not start at the new rank");
        if (!f.terminal_matches) fail(e, "last stage differs from E(S)");
        if (!(f.stages.back().basis == candidate.products)) fail(e, "last stage differs from the basis");
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("delta_expansion", "GoodProducts.spanFin");
        if (!small) {
            e.detail = "skipped (n > " + std::to_string(options.small_n) + ")";
            return e;
        }
        std::size_t count = 0;
        for (std::size_t mu = 0; mu <= n; ++mu) {
            const IndexSet j = order.indices_below(mu);
            const CubeSet sj = proj_set(s, j);
            for (const Point& x : sj.points()) {
                ++count;
                if (!(evaluate_combination(sj, delta_expansion(sj, x, j)) == FunctionOnS::delta(sj, x))) {
                    fail(e, "expansion at " + x.to_string() + " is not the Kronecker delta");
                }
            }
        }
        if (e.pass) e.detail = std::to_string(count) + " expansions";
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("definitional_oracle", "definition of E(S)");
        if (!small) {
            e.detail = "skipped (n > " + std::to_string(options.small_n) + ")";
            return e;
        }
        for (const Product& p : enumerate_products(order, options.small_n)) {
            if (candidate.contains(p) != is_good_definitional(s, p, caps)) {
                fail(e, "membership of " + p.to_string() + " disagrees with the definition");
            }
        }
        return e;
    });

    tasks.emplace_back([&] {
        auto e = entry("decompose_reconstruct", "GoodProducts span");
        if (s.size() > options.max_decompose_points) {
            e.detail = "skipped (|S| > " + std::to_string(options.max_decompose_points) + ")";
            return e;
        }
        Rng rng(options.seed);
        try {
            const Decomposer dec(candidate);
            for (std::size_t t = 0; t < options.random_functions; ++t) {
                std::vector<Integer> v;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    v.emplace_back(static_cast<long>(uniform_int(rng, -1000000, 1000000)));
                }
                dec(FunctionOnS(s, std::move(v)));
            }
        } catch (const InvariantError& ex) {
            fail(e, ex.what());
        }
        if (e.pass) e.detail = std::to_string(options.random_functions) + " random functions";
        return e;
    });

    std::vector<std::future<CheckEntry>> running;
    running.reserve(tasks.size());
    for (auto& task : tasks) running.push_back(std::async(std::launch::async, task));

    VerificationReport report{options.seed, {}};
    for (auto& f : running) report.checks.push_back(f.get());
    return report;
}

}  // namespace nobeling
