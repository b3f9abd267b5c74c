#include <doctest.h>

#include "nobeling/profinite.hpp"
#include "oracles.hpp"

using namespace nobeling;

namespace {

std::vector<std::string> point_strings(const Embedding& e) {
    std::vector<std::string> out;
    for (const Point& x : e.points) out.push_back(x.to_string());
    return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("clopen_embedding examples") {
    const FiniteSpace ab({"a", "b"});
    CHECK(point_strings(clopen_embedding(ab, ClopenFamily::from_labels(ab, {{"a"}}))) ==
          Strings{"1", "0"});
    const FiniteSpace abc({"a", "b", "c"});
    const Embedding e = clopen_embedding(abc, ClopenFamily::from_labels(abc, {{"a"}, {"b"}}));
    CHECK(point_strings(e) == Strings{"10", "01", "00"});
    CHECK(e.image.size() == 3);
    CHECK_THROWS_AS(clopen_embedding(ab, ClopenFamily::from_labels(ab, {{"a", "b"}})),
                    ContractError);
    CHECK_THROWS_AS(FiniteSpace({"a", "a"}), ContractError);
}

TEST_CASE("all_clopens sizes and order") {
    const auto one = all_clopens(FiniteSpace({"a"}));
    REQUIRE(one.size() == 2);
    CHECK(one.sets()[0] == std::vector<bool>{false});
    CHECK(one.sets()[1] == std::vector<bool>{true});
    CHECK(all_clopens(FiniteSpace({"a", "b"})).size() == 4);
    CHECK(all_clopens(FiniteSpace({"a", "b", "c"})).size() == 8);
    std::vector<std::string> many;
    for (int k = 0; k < 13; ++k) many.push_back("x" + std::to_string(k));
    CHECK_THROWS_AS(all_clopens(FiniteSpace(many)), ResourceError);
}

TEST_CASE("minimal separating families separate") {
    for (std::size_t size = 1; size <= 20; ++size) {
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < size; ++k) labels.push_back(std::to_string(k));
        const FiniteSpace t(labels);
        const ClopenFamily f = minimal_separating_family(t);
        CHECK(f.separates());
        CHECK(clopen_embedding(t, f).image.size() == size);
    }
}

TEST_CASE("free bases of finite spaces") {
    CHECK(free_basis_of_finite_space(FiniteSpace({"a"})).products.size() == 1);
    const FiniteSpace abc({"a", "b", "c"});
    const GoodBasis b =
        free_basis_of_finite_space(abc, ClopenFamily::from_labels(abc, {{"a"}, {"b"}}));
    CHECK(b.products.size() == 3);
    CHECK(b.space.dimension() == 2);
    const FiniteSpace ab({"a", "b"});
    const GoodBasis c = free_basis_of_finite_space(ab, ClopenFamily::from_labels(ab, {{"a"}}));
    CHECK(c.products == std::vector<Product>{Product(), Product(c.order(), {0})});
    for (std::size_t size = 1; size <= 10; ++size) {
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < size; ++k) labels.push_back(std::to_string(k));
        CHECK(free_basis_of_finite_space(FiniteSpace(labels)).products.size() == size);
    }
}

TEST_CASE("stage consistency") {
    InverseSystem constant;
    constant.stages = {FiniteSpace({"a", "b"}), FiniteSpace({"a", "b"}), FiniteSpace({"a", "b"})};
    constant.transitions = {{0, 1}, {0, 1}};
    for (std::size_t k = 1; k < 3; ++k) {
        const StageReport r = stage_consistency(constant, k);
        CHECK(r.pass());
        CHECK(r.previous_basis == r.current_basis);
    }
    InverseSystem refine;
    refine.stages = {FiniteSpace({"0", "1"}), FiniteSpace({"00", "01", "10", "11"})};
    refine.transitions = {{0, 0, 1, 1}};
    const StageReport r = stage_consistency(refine, 1);
    CHECK(r.pass());
    CHECK(r.current_basis == 4);
    refine.transitions = {{0, 0, 0, 0}};
    CHECK_THROWS_AS(stage_consistency(refine, 1), InvariantError);
}

TEST_CASE("generated examples") {
    const CubeSet d = diagonal(2);
    CHECK(d == oracle::cube(2, {"00", "11"}));
    CHECK(full_cube(3).size() == 8);
    const CubeSet p = padic(2, 2);
    CHECK(p.size() == 4);
    CHECK(good_products_recursive(p).products.size() == 4);
    CHECK(padic(3, 2).size() == 9);
    CHECK(generate_example("cantor_truncation", {"3"}) == full_cube(3));
    CHECK(generate_example("random_points", {"6", "10"}, 4).size() == 10);
    CHECK(generate_example("random_closed", {"6", "0.3"}, 4) ==
          generate_example("random_closed", {"6", "0.3"}, 4));
    CHECK_THROWS_AS(generate_example("torus", {}), ContractError);
    CHECK_THROWS_AS(generate_example("full_cube", {"x"}), ContractError);
    CHECK_THROWS_AS(full_cube(30), ResourceError);
}
