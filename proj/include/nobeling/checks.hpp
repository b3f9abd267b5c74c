#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nobeling/basis.hpp"

namespace nobeling {

// Matrix of pi_mu^* on the delta basis of C(S_mu, Z): row y is the pullback
// of delta_y, written over the points of S.
IntMatrix pullback_matrix(const CubeSet& s, std::size_t mu);

// Matrix of g on the delta basis of C(S, Z): row x is g(delta_x) over S'.
IntMatrix g_matrix(const CubeSet& s, std::size_t mu);

// Exactness of 0 -> C(S_mu) -> C(S) -> C(S') at a successor rank.
struct ExactnessReport {
    std::size_t mu = 0;
    std::size_t image_rank = 0;   // rank of pi_mu^*
    std::size_t kernel_rank = 0;  // rank of ker g
    bool injective = false;
    bool composite_zero = false;
    bool image_equals_kernel = false;

    bool pass() const { return injective && composite_zero && image_equals_kernel; }
};

// Requires contained_check(S, mu + 1).
ExactnessReport check_exactness(const CubeSet& s, std::size_t mu);

struct TailReport {
    std::size_t mu = 0;
    std::size_t headed = 0;       // |E'(S)|
    std::size_t below = 0;        // |E(S_mu)|
    std::size_t prime = 0;        // |E(S')|
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

// For p in E(S) headed by the rank-mu coordinate: g(ev_S(p)) = ev_S'(tail p)
// and tail p in E(S'); the rest of E(S) is E(S_mu); and both reverse
// inclusions, so E(S) is the disjoint union of E(S_mu) and mu :: E(S').
// The three bases are computed with the greedy algorithm.
TailReport check_tail_identities(const CubeSet& s, std::size_t mu, const Caps& caps = {});

struct FiltrationStage {
    std::size_t mu = 0;
    std::vector<Product> basis;  // E(S_mu)
};

struct Filtration {
    std::vector<FiltrationStage> stages;  // mu = 0..n
    bool monotone = false;                // E(S_mu') ⊆ E(S_mu) for mu' < mu
    bool new_elements_headed = false;     // E(S_mu) \ E(S_{mu-1}) all start at rank mu-1
    bool terminal_matches = false;        // E(S_n) equals E(S) by the other algorithm

    bool pass() const { return monotone && new_elements_headed && terminal_matches; }
};

Filtration prefix_filtration(const CubeSet& s, Method method = Method::recursive,
                             const Caps& caps = {});

struct CheckEntry {
    std::string name;
    std::string lemma;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    Caps caps;
    std::size_t random_functions = 16;
    std::size_t small_n = 6;            // delta expansions and the definitional oracle
    std::size_t max_decompose_points = 512;
    bool inject_fault = false;          // corrupt the basis before checking (tests only)
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<CheckEntry> checks;

    bool pass() const;
};

// Runs every structural check on S. Independent checks run concurrently;
// entries are reported in a fixed order.
VerificationReport run_verification(const CubeSet& s, const VerifyOptions& options = {});

}  // namespace nobeling
