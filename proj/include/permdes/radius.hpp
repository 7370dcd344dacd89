#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "permdes/permutation.hpp"

namespace permdes {

enum class RadiusMode { automatic, naive, coset };

std::string to_string(RadiusMode mode);
RadiusMode parse_radius_mode(const std::string& name);

inline constexpr int kDefaultRadiusDegreeCap = 10;

struct RadiusOptions {
    RadiusMode mode = RadiusMode::automatic;
    /// Worker threads for naive enumeration; 0 = hardware threads.
    unsigned jobs = 1;
    int degree_cap = kDefaultRadiusDegreeCap;
};

struct RadiusResult {
    int radius = 0;
    /// Lexicographically least permutation at distance `radius` from the set.
    Permutation witness = Permutation::identity(1);
    /// Permutations evaluated completely (leaves in naive mode, coset
    /// representatives in coset mode).
    std::size_t enumerated = 0;
    /// Mode that actually ran: naive or coset.
    RadiusMode mode = RadiusMode::naive;
    std::vector<std::string> notes;
};

/// max over sigma in S_n of min over d in D of d_S(sigma, d), by exhaustive
/// depth-first enumeration of S_n in lexicographic order.
///
/// Subtrees are cut when the agreement counts already force the minimum
/// distance at or below the best found. The search space is split by the
/// first image; each block keeps its own best, and blocks are merged by
/// (radius desc, witness asc), so the result does not depend on `jobs`.
RadiusResult covering_radius_naive(const PermSet& set, unsigned jobs = 1,
                                   int degree_cap = kDefaultRadiusDegreeCap);

/// Coset mode evaluates one representative per left coset sigma D, which is
/// sound only when D is a group. Non-groups fall back to naive with a note.
RadiusResult covering_radius(const PermSet& set, const RadiusOptions& options = {});

/// The k permutations farthest from the set, sorted by distance descending
/// and then lexicographically.
std::vector<std::pair<Permutation, int>> farthest_points(const PermSet& set, std::size_t k,
                                                         int degree_cap = kDefaultRadiusDegreeCap);

}  // namespace permdes
