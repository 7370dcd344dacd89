#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permdes/charlier.hpp"
#include "permdes/permutation.hpp"
#include "permdes/radius.hpp"

namespace permdes {

/// floor((t + 1) / 2).
int half_strength(int t);

// Caveat flags attached to bounds and reports.
inline constexpr const char* kCaveatHalfStrengthOne = "s=1 is outside the s>1 hypothesis of the Charlier bound; reporting n-2";
inline constexpr const char* kCaveatDegenerate = "n - x(s) <= 0: bound degenerates to 0";
inline constexpr const char* kCaveatKrasikov = "krasikov_floor = floor(n - (s + 2 sqrt(s) + 1)) only estimates thm1 from below; it is not a covering-radius bound";

struct CharlierBound {
    int bound = 0;
    int s = 0;
    RootBracket bracket;  // around x(s)
    std::vector<std::string> caveats;
};

/// Integer form of rho(D) < n - x(s) for a design of strength t >= 2.
///
/// n - x(s) is not an integer when s > 1 (C_s has no integer zeros), so the
/// bracket is refined until floor(n - lo) == floor(n - hi).
CharlierBound charlier_bound(int n, int t, const Rational& tol = default_root_tolerance());

/// rho(D) <= n - 1 for a 1-design.
int one_design_bound(int n);

/// k + 2 sqrt(k) + 1, an upper bound on x(k).
double krasikov_upper(int k);

struct AnnihilationReport {
    int n = 0;
    int t = 0;
    int s = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    /// n - x(s), the root divided out of the reversed Charlier polynomial.
    long double root = 0;
    long double max_abs_residual = 0;
    long double tolerance = 0;
    Permutation worst_point = Permutation::identity(1);
    bool passed = false;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// For random sigma, evaluates sum_i g_i C^_s(i) P_s(i), where g is the
/// distribution of distances from sigma to D and P_s = C^_s / (x - (n - x(s))).
/// Every value vanishes when D is a t-design with 2s - 1 <= t. The tolerance
/// is scaled by max(1, max_i |C^_s(i) P_s(i)|).
AnnihilationReport verify_annihilation(const PermSet& set, int t, std::size_t trials, long double tol = 1e-8L,
                                       std::uint64_t seed = kDefaultSeed);

/// Coefficients (ascending, in the distance variable) of P_s for degree n.
std::vector<long double> annihilator_quotient(int n, int s);

struct BoundReport {
    int n = 0;
    std::size_t size = 0;
    int strength = 0;
    int transitivity = 0;
    std::optional<int> s;
    std::optional<int> thm1;
    std::optional<int> thm2;
    std::optional<int> cw;
    std::optional<int> krasikov_floor;
    std::optional<int> exact_radius;
    std::optional<Permutation> witness;
    std::optional<std::string> radius_mode;
    /// Name of the smallest applicable upper bound ("thm1", "thm2" or "cw").
    std::optional<std::string> tightest;
    std::vector<std::string> caveats;
    /// Bounds the exact radius exceeds; non-empty would contradict a theorem.
    std::vector<std::string> violations;
};

struct BoundOptions {
    bool compute_exact = false;
    RadiusOptions radius;
};

/// Computes strength and transitivity, fills every applicable bound and,
/// on request, the exact covering radius checked against each bound.
BoundReport bound_report(const PermSet& set, const BoundOptions& options = {});

}  // namespace permdes
