#pragma once

#include <vector>

#include "permdes/exact.hpp"

namespace permdes {

/// Permutations of n letters with exactly k fixed points, k = 0..n.
///
/// w[k] = C(n, k) D(n - k). The sphere of radius i around a point of S_n
/// has v_i = w[n - i] elements.
struct RencontresTable {
    int n = 0;
    std::vector<Integer> w;

    const Integer& sphere_size(int i) const { return w[static_cast<std::size_t>(n - i)]; }
};

/// D_0 = 1, D_1 = 0, D_m = (m - 1)(D_{m-1} + D_{m-2}).
Integer derangements(int m);

Integer factorial(int m);
Integer binomial(int n, int k);

RencontresTable rencontres(int n);

/// Sum over j of (v_j / n!) j^i: the i-th moment of the distance from a
/// uniformly random permutation to a fixed one.
Rational space_moment(int n, int i);

/// Distance distribution of the whole space, v_j / n! for j = 0..n.
std::vector<Rational> space_distribution(int n);

}  // namespace permdes
