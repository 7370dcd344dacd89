#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permdes/permutation.hpp"

namespace permdes {

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

/// Closure of `generators` under composition, sorted lexicographically and
/// flagged as a group. An empty generator list yields {identity}.
PermSet generate_group(int n, const std::vector<Permutation>& generators,
                       std::size_t cap = kDefaultClosureCap);

/// Named permutation groups.
///
///   symmetric n, alternating n, cyclic n, dihedral n (order 2n, n >= 3),
///   agl1 p : x -> a x + b mod p on p points,
///   pgl2 p : x -> (a x + b) / (c x + d) on the p + 1 points of the
///            projective line, infinity being the last letter.
PermSet construct_named(const std::string& family, int param, std::size_t cap = kDefaultClosureCap);

/// Names accepted by construct_named.
const std::vector<std::string>& named_families();

bool is_prime(int p);

/// Largest t such that every ordered t-tuple of distinct letters can be sent
/// to every other by some element of the set. Does not assume a group.
int transitivity_degree(const PermSet& set);

/// t-transitivity test for a single t (0 <= t <= n).
bool is_t_transitive(const PermSet& set, int t);

}  // namespace permdes
