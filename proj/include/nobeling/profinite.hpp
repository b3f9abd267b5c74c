#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nobeling/basis.hpp"
#include "nobeling/cube.hpp"
#include "nobeling/errors.hpp"

namespace nobeling {

// A finite discrete space: one stage of a profinite space.
class FiniteSpace {
public:
    FiniteSpace() = default;
    explicit FiniteSpace(std::vector<std::string> elements);

    const std::vector<std::string>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    bool operator==(const FiniteSpace&) const = default;

private:
    std::vector<std::string> elements_;
};

// An ordered list of subsets of a finite space. Every subset of a finite
// discrete space is clopen. Membership is stored per element index.
class ClopenFamily {
public:
    using Subset = std::vector<bool>;

    ClopenFamily() = default;
    ClopenFamily(FiniteSpace space, std::vector<Subset> sets);

    static ClopenFamily from_labels(FiniteSpace space,
                                    const std::vector<std::vector<std::string>>& sets);

    const FiniteSpace& space() const { return space_; }
    const std::vector<Subset>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }

    // A pair of element indices that no set tells apart, if any.
    std::optional<std::pair<std::size_t, std::size_t>> unseparated_pair() const;
    bool separates() const { return !unseparated_pair().has_value(); }

private:
    FiniteSpace space_;
    std::vector<Subset> sets_;
};

// A tower of finite spaces with surjections stage k -> stage k-1.
struct InverseSystem {
    std::vector<FiniteSpace> stages;
    // transitions[k - 1][x] is the image in stage k-1 of element x of stage k.
    std::vector<std::vector<std::size_t>> transitions;
};

struct Embedding {
    CubeSet image;
    std::vector<Point> points;  // image of each element, by element index
};

// Coordinate i of the image of x is 1 iff x lies in family.sets()[i].
// Throws ContractError naming an unseparated pair when the family does not
// separate points.
Embedding clopen_embedding(const FiniteSpace& space, const ClopenFamily& family);

// All 2^|T| subsets, by size and then lexicographically on element indices.
ClopenFamily all_clopens(const FiniteSpace& space, const Caps& caps = {});

// Repeatedly adds the subset separating the most still-unseparated pairs,
// ties broken by the all_clopens order. Falls back to singletons as
// candidates when |T| exceeds the clopen cap.
ClopenFamily minimal_separating_family(const FiniteSpace& space, const Caps& caps = {});

// all_clopens when the resulting cube fits under the dimension cap,
// otherwise minimal_separating_family.
ClopenFamily default_family(const FiniteSpace& space, const Caps& caps = {});

GoodBasis free_basis_of_finite_space(const FiniteSpace& space,
                                     const std::optional<ClopenFamily>& family = std::nullopt,
                                     const Caps& caps = {});

// Coordinates for stage k: preimages of the stage k-1 coordinates first
// (lowest ranks), then sets separating what they leave unseparated.
std::vector<ClopenFamily> tower_families(const InverseSystem& system, std::size_t k,
                                         const Caps& caps = {});

struct StageReport {
    std::size_t k = 0;
    std::size_t low_coordinates = 0;
    std::size_t coordinates = 0;
    std::size_t previous_size = 0;
    std::size_t current_size = 0;
    std::size_t previous_basis = 0;
    std::size_t current_basis = 0;
    bool projection_matches = false;  // image_{k-1} = proj_below(image_k, low)
    bool basis_included = false;      // E(image_{k-1}) ⊆ E(image_k)

    bool pass() const { return projection_matches && basis_included; }
};

// Throws InvariantError when a transition up to stage k is not surjective.
StageReport stage_consistency(const InverseSystem& system, std::size_t k, const Caps& caps = {});

// Named example families.
CubeSet full_cube(std::size_t n, const Caps& caps = {});
CubeSet diagonal(std::size_t n);
// Z/p^k with coordinate (j, d) = [digit j equals d], d in 1..p-1, lower digits first.
CubeSet padic(std::size_t p, std::size_t k, const Caps& caps = {});
CubeSet random_closed(std::size_t n, double density, std::uint64_t seed, const Caps& caps = {});
// `count` distinct points drawn uniformly from {0,1}^n.
CubeSet random_points(std::size_t n, std::size_t count, std::uint64_t seed, const Caps& caps = {});

// Dispatch by name: full_cube n | cantor_truncation n | diagonal n | padic p k |
// random_closed n density | random_points n count. Throws ContractError for unknown names or bad params.
CubeSet generate_example(const std::string& name, const std::vector<std::string>& params,
                         std::uint64_t seed = 0, const Caps& caps = {});

}  // namespace nobeling
