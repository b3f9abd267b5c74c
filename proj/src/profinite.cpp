#include "nobeling/profinite.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_set>

#include "nobeling/random.hpp"

namespace nobeling {

namespace {

using Subset = ClopenFamily::Subset;

// Subsets of {0..m-1} by size, then lexicographically on sorted indices.
std::vector<Subset> subsets_in_canonical_order(std::size_t m) {
    std::vector<Subset> out;
    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            Subset s(m, false);
            for (std::size_t i : idx) s[i] = true;
            out.push_back(std::move(s));
            // Next k-combination in lexicographic order.
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

// Greedily appends sets from the candidates until all pairs are separated.
std::vector<Subset> extend_to_separating(std::size_t m, std::vector<Subset> sets,
                                         const Caps& caps) {
    // Elements share a class iff no chosen set separates them.
    std::vector<std::size_t> cls(m, 0);
    auto refine = [&](const Subset& s) {
        std::vector<std::pair<std::size_t, bool>> keys(m);
        for (std::size_t x = 0; x < m; ++x) keys[x] = {cls[x], s[x]};
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t x = 0; x < m; ++x) {
            cls[x] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[x]) - sorted.begin());
        }
    };
    auto gain = [&](const Subset& s) {
        std::vector<std::size_t> inside(m, 0), total(m, 0);
        for (std::size_t x = 0; x < m; ++x) {
            ++total[cls[x]];
            if (s[x]) ++inside[cls[x]];
        }
        std::size_t g = 0;
        for (std::size_t c = 0; c < m; ++c) g += inside[c] * (total[c] - inside[c]);
        return g;
    };
    for (const auto& s : sets) refine(s);

    std::vector<Subset> candidates;
    if (m <= caps.max_clopen_elements) {
        candidates = subsets_in_canonical_order(m);
    } else {
        for (std::size_t x = 0; x < m; ++x) {
            Subset s(m, false);
            s[x] = true;
            candidates.push_back(std::move(s));
        }
    }
    for (;;) {
        std::size_t best_gain = 0;
        const Subset* best = nullptr;
        for (const auto& c : candidates) {
            const std::size_t g = gain(c);
            if (g > best_gain) {
                best_gain = g;
                best = &c;
            }
        }
        if (!best) break;
        sets.push_back(*best);
        refine(*best);
    }
    return sets;
}

std::size_t parse_count(const std::string& text, const char* what) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ContractError(std::string("invalid ") + what + " '" + text + "'");
    }
    return value;
}

double parse_density(const std::string& text) {
    try {
        std::size_t used = 0;
        const double d = std::stod(text, &used);
        if (used == text.size()) return d;
    } catch (const std::exception&) {
    }
    throw ContractError("invalid density '" + text + "'");
}

void require_arity(const std::string& name, const std::vector<std::string>& params, std::size_t k) {
    if (params.size() != k) {
        throw ContractError(name + " takes " + std::to_string(k) + " parameter(s), got " +
                            std::to_string(params.size()));
    }
}

void validate_transitions(const InverseSystem& system, std::size_t k) {
    if (k == 0 || k >= system.stages.size()) {
        throw ContractError("stage index " + std::to_string(k) + " out of range");
    }
    if (system.transitions.size() + 1 < system.stages.size()) {
        throw ContractError("inverse system is missing transitions");
    }
    for (std::size_t j = 1; j <= k; ++j) {
        const auto& map = system.transitions[j - 1];
        const std::size_t target = system.stages[j - 1].size();
        if (map.size() != system.stages[j].size()) {
            throw ContractError("transition " + std::to_string(j) + " is not total");
        }
        std::vector<bool> hit(target, false);
        for (std::size_t y : map) {
            if (y >= target) throw ContractError("transition " + std::to_string(j) + " out of range");
            hit[y] = true;
        }
        for (std::size_t y = 0; y < target; ++y) {
            if (!hit[y]) {
                throw InvariantError("transition " + std::to_string(j) + " is not surjective: '" +
                                     system.stages[j - 1].elements()[y] + "' has no preimage");
            }
        }
    }
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> elements) : elements_(std::move(elements)) {
    std::set<std::string> seen;
    for (const auto& e : elements_) {
        if (e.empty()) throw ContractError("finite space labels must be nonempty");
        if (!seen.insert(e).second) throw ContractError("duplicate label '" + e + "'");
    }
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
    auto it = std::find(elements_.begin(), elements_.end(), label);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

ClopenFamily::ClopenFamily(FiniteSpace space, std::vector<Subset> sets)
    : space_(std::move(space)), sets_(std::move(sets)) {
    for (const auto& s : sets_) {
        if (s.size() != space_.size()) throw ContractError("clopen set does not match the space");
    }
}

ClopenFamily ClopenFamily::from_labels(FiniteSpace space,
                                       const std::vector<std::vector<std::string>>& sets) {
    std::vector<Subset> members;
    for (const auto& labels : sets) {
        Subset s(space.size(), false);
        for (const auto& label : labels) {
            auto idx = space.index_of(label);
            if (!idx) throw ContractError("clopen set mentions unknown element '" + label + "'");
            s[*idx] = true;
        }
        members.push_back(std::move(s));
    }
    return ClopenFamily(std::move(space), std::move(members));
}

std::optional<std::pair<std::size_t, std::size_t>> ClopenFamily::unseparated_pair() const {
    const std::size_t m = space_.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const bool split = std::any_of(sets_.begin(), sets_.end(),
                                           [a, b](const Subset& s) { return s[a] != s[b]; });
            if (!split) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

Embedding clopen_embedding(const FiniteSpace& space, const ClopenFamily& family) {
    if (!(family.space() == space)) throw ContractError("clopen family belongs to another space");
    if (auto pair = family.unseparated_pair()) {
        throw ContractError("family does not separate '" + space.elements()[pair->first] +
                            "' and '" + space.elements()[pair->second] + "'");
    }
    Embedding out;
    const std::size_t n = family.size();
    for (std::size_t x = 0; x < space.size(); ++x) {
        std::vector<bool> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = family.sets()[i][x];
        out.points.emplace_back(std::move(bits));
    }
    out.image = CubeSet(CoordinateOrder(n), out.points);
    return out;
}

ClopenFamily all_clopens(const FiniteSpace& space, const Caps& caps) {
    if (space.size() > caps.max_clopen_elements) {
        throw ResourceError("all clopens of a " + std::to_string(space.size()) +
                            "-point space exceed the cap of " +
                            std::to_string(caps.max_clopen_elements) + " points");
    }
    return ClopenFamily(space, subsets_in_canonical_order(space.size()));
}

ClopenFamily minimal_separating_family(const FiniteSpace& space, const Caps& caps) {
    return ClopenFamily(space, extend_to_separating(space.size(), {}, caps));
}

ClopenFamily default_family(const FiniteSpace& space, const Caps& caps) {
    const std::size_t m = space.size();
    if (m <= caps.max_clopen_elements && m < 63 && (std::uint64_t{1} << m) <= caps.max_n) {
        return all_clopens(space, caps);
    }
    return minimal_separating_family(space, caps);
}

GoodBasis free_basis_of_finite_space(const FiniteSpace& space,
                                     const std::optional<ClopenFamily>& family, const Caps& caps) {
    const ClopenFamily fam = family ? *family : default_family(space, caps);
    return good_products_recursive(clopen_embedding(space, fam).image, caps);
}

std::vector<ClopenFamily> tower_families(const InverseSystem& system, std::size_t k,
                                         const Caps& caps) {
    if (k > 0) validate_transitions(system, k);
    if (k >= system.stages.size()) throw ContractError("stage index out of range");
    std::vector<ClopenFamily> out;
    out.push_back(minimal_separating_family(system.stages[0], caps));
    for (std::size_t j = 1; j <= k; ++j) {
        const auto& map = system.transitions[j - 1];
        const std::size_t m = system.stages[j].size();
        std::vector<Subset> pulled;
        for (const auto& s : out.back().sets()) {
            Subset pre(m, false);
            for (std::size_t x = 0; x < m; ++x) pre[x] = s[map[x]];
            pulled.push_back(std::move(pre));
        }
        out.emplace_back(system.stages[j], extend_to_separating(m, std::move(pulled), caps));
    }
    return out;
}

StageReport stage_consistency(const InverseSystem& system, std::size_t k, const Caps& caps) {
    validate_transitions(system, k);
    const auto families = tower_families(system, k, caps);
    StageReport r;
    r.k = k;
    r.low_coordinates = families[k - 1].size();
    r.coordinates = families[k].size();

    const CubeSet current = clopen_embedding(system.stages[k], families[k]).image;
    const Embedding prev = clopen_embedding(system.stages[k - 1], families[k - 1]);
    // Place the previous stage in the same cube; the added coordinates are zero.
    std::vector<Point> padded;
    for (const Point& x : prev.image.points()) {
        std::vector<bool> bits(r.coordinates, false);
        for (std::size_t i = 0; i < x.size(); ++i) bits[i] = x[i];
        padded.emplace_back(std::move(bits));
    }
    const CubeSet previous(CoordinateOrder(r.coordinates), std::move(padded));

    r.previous_size = previous.size();
    r.current_size = current.size();
    r.projection_matches = proj_below(current, r.low_coordinates) == previous;
    const auto e_prev = good_products_recursive(previous, caps).products;
    const auto e_cur = good_products_recursive(current, caps).products;
    r.previous_basis = e_prev.size();
    r.current_basis = e_cur.size();
    r.basis_included = std::all_of(e_prev.begin(), e_prev.end(), [&e_cur](const Product& p) {
        return std::find(e_cur.begin(), e_cur.end(), p) != e_cur.end();
    });
    return r;
}

CubeSet full_cube(std::size_t n, const Caps& caps) {
    if (n >= 63 || (std::uint64_t{1} << n) > caps.max_points) {
        throw ResourceError("full cube of dimension " + std::to_string(n) +
                            " exceeds the point cap of " + std::to_string(caps.max_points));
    }
    std::vector<Point> pts;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<bool> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = m >> i & 1U;
        pts.emplace_back(std::move(bits));
    }
    return CubeSet(CoordinateOrder(n), std::move(pts));
}

CubeSet diagonal(std::size_t n) {
    return CubeSet(CoordinateOrder(n), {Point(std::vector<bool>(n, false)),
                                        Point(std::vector<bool>(n, true))});
}

CubeSet padic(std::size_t p, std::size_t k, const Caps& caps) {
    if (p < 2) throw ContractError("padic: p must be at least 2");
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < k; ++j) {
        count *= p;
        if (count > caps.max_points) throw ResourceError("padic: p^k exceeds the point cap");
    }
    const std::size_t n = k * (p - 1);
    std::vector<Point> pts;
    for (std::uint64_t x = 0; x < count; ++x) {
        std::vector<bool> bits(n, false);
        std::uint64_t rest = x;
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint64_t digit = rest % p;
            rest /= p;
            if (digit != 0) bits[j * (p - 1) + (digit - 1)] = true;
        }
        pts.emplace_back(std::move(bits));
    }
    return CubeSet(CoordinateOrder(n), std::move(pts));
}

CubeSet random_closed(std::size_t n, double density, std::uint64_t seed, const Caps& caps) {
    if (!(density >= 0.0 && density <= 1.0)) throw ContractError("density must lie in [0, 1]");
    if (n > caps.max_n || n >= 63) {
        throw ResourceError("random_closed: dimension " + std::to_string(n) + " exceeds the cap");
    }
    Rng rng(seed);
    std::vector<Point> pts;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (uniform_unit(rng) >= density) continue;
        std::vector<bool> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = m >> i & 1U;
        pts.emplace_back(std::move(bits));
        if (pts.size() > caps.max_points) throw ResourceError("random_closed: too many points");
    }
    return CubeSet(CoordinateOrder(n), std::move(pts));
}

CubeSet random_points(std::size_t n, std::size_t count, std::uint64_t seed, const Caps& caps) {
    if (n >= 63) throw ResourceError("random_points: dimension too large");
    const std::uint64_t total = std::uint64_t{1} << n;
    if (count > total) throw ContractError("random_points: more points than the cube holds");
    if (count > caps.max_points) throw ResourceError("random_points: count exceeds the point cap");
    Rng rng(seed);
    std::vector<std::uint64_t> chosen;
    if (2 * count > total) {
        std::vector<std::uint64_t> all(total);
        for (std::uint64_t m = 0; m < total; ++m) all[m] = m;
        for (std::size_t i = 0; i < count; ++i) {
            std::swap(all[i], all[i + uniform_below(rng, total - i)]);
        }
        chosen.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
    } else {
        std::unordered_set<std::uint64_t> seen;
        while (chosen.size() < count) {
            const std::uint64_t m = uniform_below(rng, total);
            if (seen.insert(m).second) chosen.push_back(m);
        }
    }
    std::vector<Point> pts;
    for (std::uint64_t m : chosen) {
        std::vector<bool> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = m >> i & 1U;
        pts.emplace_back(std::move(bits));
    }
    return CubeSet(CoordinateOrder(n), std::move(pts));
}

CubeSet generate_example(const std::string& name, const std::vector<std::string>& params,
                         std::uint64_t seed, const Caps& caps) {
    if (name == "full_cube" || name == "cantor_truncation") {
        require_arity(name, params, 1);
        return full_cube(parse_count(params[0], "dimension"), caps);
    }
    if (name == "diagonal") {
        require_arity(name, params, 1);
        return diagonal(parse_count(params[0], "dimension"));
    }
    if (name == "padic") {
        require_arity(name, params, 2);
        return padic(parse_count(params[0], "prime"), parse_count(params[1], "exponent"), caps);
    }
    if (name == "random_closed") {
        require_arity(name, params, 2);
        return random_closed(parse_count(params[0], "dimension"), parse_density(params[1]), seed,
                             caps);
    }
    if (name == "random_points") {
        require_arity(name, params, 2);
        return random_points(parse_count(params[0], "dimension"), parse_count(params[1], "count"),
                             seed, caps);
    }
    throw ContractError("unknown example '" + name + "'");
}

}  // namespace nobeling
