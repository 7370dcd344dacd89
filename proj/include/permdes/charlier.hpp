#pragma once

#include <vector>

#include "permdes/exact.hpp"
#include "permdes/permutation.hpp"
#include "permdes/polynomial.hpp"

namespace permdes {

/// A verification identity did not hold. Distinct from input errors so the
/// CLI can report it with its own exit code.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// Charlier polynomial C_k for the Poisson(1) weight, normalized by the
/// exponential generating function e^t (1 - t)^x = sum C_k(x) t^k / k!.
///
/// C_0 = 1, C_1 = 1 - x, C_{k+1} = (k + 1 - x) C_k - k C_{k-1}.
IntPolynomial charlier_poly(int k);

/// C_0 .. C_kmax.
std::vector<IntPolynomial> charlier_table(int kmax);

/// Reversed polynomial x -> C_k(n - x), orthogonal for the distance weight of S_n.
IntPolynomial reversed_charlier(int k, int n);
Rational reversed_eval(int k, int n, const Rational& x);

/// (1/n!) sum_k v_k F(k) G(k), with F and G tabulated on 0..n.
Rational space_inner_product(int n, const std::vector<Rational>& f, const std::vector<Rational>& g);

struct OrthogonalityEntry {
    int r = 0;
    int s = 0;
    Rational value;
    Rational expected;
};

struct OrthogonalityReport {
    int n = 0;
    int rmax = 0;
    std::vector<OrthogonalityEntry> entries;
};

/// Checks <C^_r, C^_s>_n = r! [r == s] for 0 <= r, s <= rmax <= n/2.
/// Throws VerificationFailure naming the first pair that differs.
OrthogonalityReport verify_orthogonality(int n, int rmax);

/// Open interval (lo, hi) holding exactly one root of the target polynomial,
/// or lo == hi when the root is rational and was hit exactly.
struct RootBracket {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool exact() const { return lo == hi; }
};

/// 10^-9.
Rational default_root_tolerance();

/// Certified bracket of width <= tol around x(k), the largest zero of C_k.
/// The Sturm count is 1 on the bracket and 0 from hi to the Krasikov ceiling.
RootBracket largest_zero(int k, const Rational& tol = default_root_tolerance());

/// Integer upper limit k + 2 ceil(sqrt k) + 2 used to start the search.
Integer root_search_ceiling(int k);

/// All integers m in [0, hi] with C_k(m) = 0.
std::vector<int> integer_root_scan(int k, int hi);

}  // namespace permdes
