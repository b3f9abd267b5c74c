#include <doctest.h>

#include "nobeling/cube.hpp"
#include "nobeling/errors.hpp"
#include "oracles.hpp"

using namespace nobeling;
using oracle::cube;

namespace {

std::vector<std::string> strings(const CubeSet& s) {
    std::vector<std::string> out;
    for (const Point& x : s.points()) out.push_back(x.to_string());
    return out;
}

std::vector<IndexSet> all_index_sets(std::size_t n) {
    std::vector<IndexSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IndexSet j;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) j.push_back(i);
        }
        out.push_back(j);
    }
    return out;
}

std::vector<CubeSet> all_subsets(std::size_t n, const CoordinateOrder& order) {
    std::vector<Point> cube_points;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        std::vector<bool> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = m >> i & 1;
        cube_points.emplace_back(bits);
    }
    std::vector<CubeSet> out;
    for (std::size_t m = 0; m < (std::size_t{1} << cube_points.size()); ++m) {
        std::vector<Point> pts;
        for (std::size_t k = 0; k < cube_points.size(); ++k) {
            if (m >> k & 1) pts.push_back(cube_points[k]);
        }
        out.emplace_back(order, pts);
    }
    return out;
}

CoordinateOrder reversed_order(std::size_t n) {
    std::vector<std::size_t> ranks(n);
    for (std::size_t i = 0; i < n; ++i) ranks[i] = n - 1 - i;
    return CoordinateOrder::from_ranks(ranks);
}

}  // namespace

TEST_CASE("coordinate orders are permutations") {
    const auto o = CoordinateOrder::from_ranks({2, 0, 1});
    CHECK(o.rank(0) == 2);
    CHECK(o.index_at(0) == 1);
    CHECK(o.indices_below(2) == IndexSet{1, 2});
    CHECK_FALSE(o.is_identity());
    CHECK(CoordinateOrder(3).is_identity());
    CHECK_THROWS_AS(CoordinateOrder::from_ranks({0, 0}), ContractError);
    CHECK_THROWS_AS(CoordinateOrder::from_ranks({0, 2}), ContractError);
}

TEST_CASE("points parse and sort") {
    CHECK(Point::parse("0110").to_string() == "0110");
    CHECK_THROWS_AS(Point::parse("01x"), ParseError);
    const CubeSet s = cube(2, {"11", "00", "10", "00"});
    CHECK(strings(s) == std::vector<std::string>{"00", "10", "11"});
    CHECK(s.index_of(Point::parse("10")) == 1);
    CHECK_FALSE(s.contains(Point::parse("01")));
    CHECK_THROWS_AS(cube(2, {"000"}), ContractError);
}

TEST_CASE("proj_set examples") {
    CHECK(strings(proj_set(cube(2, {"00", "01", "10", "11"}), {0})) ==
          std::vector<std::string>{"00", "10"});
    CHECK(strings(proj_set(cube(2, {"00", "11"}), {0})) == std::vector<std::string>{"00", "10"});
    const CubeSet s = cube(3, {"011", "101", "110"});
    CHECK(proj_set(s, {0, 1, 2}) == s);
    CHECK_THROWS_AS(proj_set(s, {3}), ContractError);
}

TEST_CASE("proj_below examples") {
    CHECK(strings(proj_below(cube(2, {"00", "11"}), 1)) == std::vector<std::string>{"00", "10"});
    const CubeSet s = cube(3, {"011", "101"});
    CHECK(proj_below(s, 3) == s);
    CHECK(strings(proj_below(s, 0)) == std::vector<std::string>{"000"});
    CHECK(proj_below(cube(2, {}), 0).empty());
    CHECK_THROWS_AS(proj_below(s, 4), ContractError);
    // rank, not index, decides which coordinates survive
    const CubeSet t(CoordinateOrder::from_ranks({1, 0}), {Point::parse("11")});
    CHECK(strings(proj_below(t, 1)) == std::vector<std::string>{"01"});
}

TEST_CASE("pullback examples") {
    const CubeSet s = cube(2, {"00", "11"});
    const CubeSet sj = proj_set(s, {0});
    const FunctionOnS f = FunctionOnS::delta(sj, Point::parse("10"));
    const FunctionOnS g = pullback(s, {0}, f);
    CHECK(g[0] == 0);
    CHECK(g[1] == 1);
    CHECK(pullback(s, {0}, FunctionOnS::constant(sj, 1)) == FunctionOnS::constant(s, 1));
    CHECK(pullback(s, {0}, FunctionOnS::zero(sj)).is_zero());
    CHECK_THROWS_AS(pullback(s, {1}, f), ContractError);
}

TEST_CASE("contained_check examples") {
    CHECK(contained_check(cube(2, {"00", "11"}), 2));
    CHECK_FALSE(contained_check(cube(2, {"00", "11"}), 1));
    CHECK(contained_check(cube(2, {"00"}), 0));
}

TEST_CASE("split_succ examples") {
    const auto full = split_succ(cube(2, {"00", "01", "10", "11"}), 1);
    CHECK(strings(full.lower) == std::vector<std::string>{"00", "10"});
    CHECK(strings(full.upper) == std::vector<std::string>{"01", "11"});
    CHECK(strings(full.prime) == std::vector<std::string>{"00", "10"});
    const auto diag = split_succ(cube(2, {"00", "11"}), 1);
    CHECK(strings(diag.lower) == std::vector<std::string>{"00"});
    CHECK(strings(diag.upper) == std::vector<std::string>{"11"});
    CHECK(diag.prime.empty());
    const auto none = split_succ(cube(2, {"00", "10"}), 1);
    CHECK(none.upper.empty());
    CHECK(none.prime.empty());
    CHECK_THROWS_AS(split_succ(cube(3, {"001"}), 1), ContractError);
    CHECK_THROWS_AS(split_succ(cube(2, {"00"}), 2), ContractError);
}

TEST_CASE("g_map examples") {
    const CubeSet s = cube(2, {"00", "01", "10", "11"});
    const FunctionOnS f(s, {0, 0, 0, 1});
    const FunctionOnS g = g_map(s, 1, f);
    CHECK(strings(g.domain()) == std::vector<std::string>{"00", "10"});
    CHECK(g[0] == 0);
    CHECK(g[1] == 1);
    CHECK(g_map(s, 1, FunctionOnS::constant(s, 9)).is_zero());
}

TEST_CASE("factors_through examples") {
    const CubeSet s = cube(2, {"00", "01", "10", "11"});
    const auto c = factors_through(s, FunctionOnS::constant(s, 3), {});
    REQUIRE(c);
    CHECK(c->domain().size() == 1);
    CHECK((*c)[0] == 3);
    CHECK(factors_through(s, FunctionOnS(s, {0, 0, 1, 1}), {0}));
    CHECK_FALSE(factors_through(s, FunctionOnS(s, {0, 0, 0, 1}), {0}));
    CHECK(greedy_factoring_set(s, FunctionOnS(s, {0, 0, 1, 1})) == IndexSet{0});
}

TEST_CASE("projection and pullback laws hold exhaustively for n <= 3") {
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto js = all_index_sets(n);
        for (const auto& order : {CoordinateOrder(n), reversed_order(n)}) {
            for (const CubeSet& s : all_subsets(n, order)) {
                for (const auto& j : js) {
                    const CubeSet sj = proj_set(s, j);
                    CHECK(proj_set(sj, j) == sj);
                    for (const auto& k : js) {
                        IndexSet both;
                        for (std::size_t i : j) {
                            if (std::find(k.begin(), k.end(), i) != k.end()) both.push_back(i);
                        }
                        CHECK(proj_set(s, both) == proj_set(sj, k));
                    }
                    // pullback is injective: distinct deltas pull back to distinct functions
                    std::vector<FunctionOnS> pulled;
                    for (const Point& y : sj.points()) {
                        pulled.push_back(pullback(s, j, FunctionOnS::delta(sj, y)));
                    }
                    for (std::size_t a = 0; a < pulled.size(); ++a) {
                        CHECK_FALSE(pulled[a].is_zero());
                        for (std::size_t b = a + 1; b < pulled.size(); ++b) {
                            CHECK_FALSE(pulled[a] == pulled[b]);
                        }
                    }
                }
                for (std::size_t mu = 0; mu <= n; ++mu) {
                    const CubeSet below = proj_below(s, mu);
                    CHECK(contained_check(below, mu));
                    if (mu < n && contained_check(s, mu + 1)) {
                        for (const Point& y : below.points()) {
                            const FunctionOnS f =
                                pullback(s, order.indices_below(mu), FunctionOnS::delta(below, y));
                            CHECK(g_map(s, mu, f).is_zero());
                        }
                    }
                }
                if (!s.empty()) {
                    const FunctionOnS f = FunctionOnS::delta(s, s.points()[0]);
                    IndexSet all;
                    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
                    const auto h = factors_through(s, f, all);
                    REQUIRE(h);
                    CHECK(*h == f);
                }
            }
        }
    }
}
