#pragma once

#include <cstdint>
#include <vector>

#include "permdes/exact.hpp"
#include "permdes/permutation.hpp"

namespace permdes {

/// Distance distribution of a permutation set.
///
/// counts[i] is the number of ordered pairs (x, y) in D x D at distance i,
/// and f[i] = counts[i] / |D|^2. Sum of f is 1, f[0] = 1/|D| and f[1] = 0.
struct FrequencyVector {
    int n = 0;
    std::size_t size = 0;
    std::vector<Integer> counts;
    std::vector<Rational> f;
};

struct MomentPair {
    int i = 0;
    Rational design;
    Rational space;
};

struct StrengthReport {
    int n = 0;
    std::size_t size = 0;
    /// Largest t <= n with all moments 1..t equal to the space's; 0 if none.
    int strength = 0;
    /// Moments 1..strength, plus the first failing one when strength < n.
    std::vector<MomentPair> moments;
    bool is_one_design = false;
};

/// Pairwise counting, split over `jobs` row blocks (0 = hardware threads).
FrequencyVector frequencies(const PermSet& set, unsigned jobs = 0);

/// Distances from a single point to every element of the set, as a
/// distribution with denominator |D|.
FrequencyVector point_distribution(const PermSet& set, const Permutation& point);

Rational design_moment(const FrequencyVector& fv, int i);

StrengthReport design_strength(const PermSet& set, unsigned jobs = 0);
StrengthReport design_strength(const FrequencyVector& fv);

/// Sum of j f_j equals n - 1.
bool is_one_design(const PermSet& set);
bool is_one_design(const FrequencyVector& fv);

/// Sum over i of f[i] Q(i), Q given by ascending coefficients.
Rational design_expectation(const FrequencyVector& fv, const std::vector<Rational>& coeffs);
long double design_expectation(const FrequencyVector& fv, const std::vector<long double>& coeffs);

Rational design_expectation(const PermSet& set, const std::vector<Rational>& coeffs);
long double design_expectation(const PermSet& set, const std::vector<long double>& coeffs);

/// Sum over i of (v_i / n!) Q(i).
Rational space_expectation(int n, const std::vector<Rational>& coeffs);

}  // namespace permdes
