#include "permdes/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include "permdes/design.hpp"
#include "permdes/groups.hpp"

namespace permdes {

namespace {

Integer floor_of(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

long double to_long_double(const Rational& q)
{
    const mpf_class value(q, 256);
    mp_exp_t exponent = 0;
    std::string digits = value.get_str(exponent, 10, 30);
    if (digits.empty()) {
        return 0.0L;
    }
    const bool negative = digits.front() == '-';
    if (negative) {
        digits.erase(0, 1);
    }
    const std::string text = (negative ? "-0." : "0.") + digits + "e" + std::to_string(exponent);
    return std::strtold(text.c_str(), nullptr);
}

Rational power_of_ten_inverse(int e)
{
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return Rational(Integer(1), den);
}

std::vector<long double> annihilator_values(int n, int s, std::vector<long double>* quotient_out)
{
    const auto reversed = reversed_charlier(s, n);
    auto quotient = annihilator_quotient(n, s);
    std::vector<long double> values;
    for (int i = 0; i <= n; ++i) {
        const long double c = static_cast<long double>(reversed.evaluate(Integer(i)).get_d());
        long double p = 0;
        for (auto it = quotient.rbegin(); it != quotient.rend(); ++it) {
            p = p * i + *it;
        }
        values.push_back(c * p);
    }
    if (quotient_out) {
        *quotient_out = std::move(quotient);
    }
    return values;
}

}  // namespace

int half_strength(int t)
{
    if (t < 1) {
        throw Error("half-strength needs t >= 1");
    }
    return (t + 1) / 2;
}

CharlierBound charlier_bound(int n, int t, const Rational& tol)
{
    if (n < 2 || t < 2) {
        throw Error("the Charlier bound needs n >= 2 and t >= 2 (use one_design_bound for t = 1)");
    }
    CharlierBound result;
    result.s = half_strength(t);
    if (result.s == 1) {
        result.bracket = largest_zero(1, tol);
        result.bound = n - 2;
        result.caveats.emplace_back(kCaveatHalfStrengthOne);
        return result;
    }

    Rational width = tol;
    for (int attempt = 0; attempt < 20; ++attempt) {
        result.bracket = largest_zero(result.s, width);
        const Rational upper = Rational(n) - result.bracket.lo;
        const Integer hi_floor = floor_of(upper);
        const Integer lo_floor = floor_of(Rational(n) - result.bracket.hi);
        if (hi_floor == lo_floor) {
            if (upper <= 0) {
                result.bound = 0;
                result.caveats.emplace_back(kCaveatDegenerate);
            } else {
                result.bound = static_cast<int>(lo_floor.get_si());
            }
            return result;
        }
        width /= 1000;
    }
    throw VerificationFailure("could not separate n - x(" + std::to_string(result.s) + ") from an integer");
}

int one_design_bound(int n)
{
    if (n < 1) {
        throw Error("degree must be at least 1");
    }
    return n - 1;
}

double krasikov_upper(int k)
{
    if (k < 1) {
        throw Error("Krasikov bound needs k >= 1");
    }
    return k + 2.0 * std::sqrt(static_cast<double>(k)) + 1.0;
}

std::vector<long double> annihilator_quotient(int n, int s)
{
    if (s < 1 || n < 1) {
        throw Error("annihilator needs s >= 1 and n >= 1");
    }
    const auto bracket = largest_zero(s, power_of_ten_inverse(30));
    const long double root = static_cast<long double>(n) - to_long_double(bracket.midpoint());

    const auto reversed = reversed_charlier(s, n);
    const int degree = reversed.degree();
    // Synthetic division by (x - root), highest degree first.
    std::vector<long double> quotient(static_cast<std::size_t>(degree), 0.0L);
    long double carry = 0;
    for (int d = degree; d >= 1; --d) {
        carry = carry * root + static_cast<long double>(reversed.coeff(d).get_d());
        quotient[static_cast<std::size_t>(d - 1)] = carry;
    }
    return quotient;
}

AnnihilationReport verify_annihilation(const PermSet& set, int t, std::size_t trials, long double tol,
                                       std::uint64_t seed)
{
    const int n = set.degree();
    if (t < 1 || t > n) {
        throw Error("claimed strength must lie in 1..n");
    }
    AnnihilationReport report;
    report.n = n;
    report.t = t;
    report.s = half_strength(t);
    report.trials = trials;
    report.seed = seed;

    const auto bracket = largest_zero(report.s, power_of_ten_inverse(30));
    report.root = static_cast<long double>(n) - to_long_double(bracket.midpoint());
    const auto values = annihilator_values(n, report.s, nullptr);
    long double scale = 1;
    for (auto v : values) {
        scale = std::max(scale, std::fabs(v));
    }
    report.tolerance = tol * scale;

    std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
    const auto size = static_cast<long double>(set.size());
    for (std::size_t trial = 0; trial < trials; ++trial) {
        // One generator per trial, so trials can be split across workers.
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
        std::mt19937_64 rng(seq);
        for (int x = 0; x < n; ++x) {
            images[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
        }
        // Fisher-Yates with explicit draws keeps the sequence library-independent.
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
        }
        const Permutation sigma(images);

        long double sum = 0;
        for (const auto& d : set) {
            sum += values[static_cast<std::size_t>(distance(sigma, d))];
        }
        const long double residual = std::fabs(sum / size);
        if (trial == 0 || residual > report.max_abs_residual) {
            report.max_abs_residual = residual;
            report.worst_point = sigma;
        }
    }
    report.passed = report.max_abs_residual <= report.tolerance;
    return report;
}

BoundReport bound_report(const PermSet& set, const BoundOptions& options)
{
    BoundReport report;
    report.n = set.degree();
    report.size = set.size();
    report.strength = design_strength(set).strength;
    report.transitivity = transitivity_degree(set);
    const int n = report.n;

    if (report.strength >= 1) {
        const int s = half_strength(report.strength);
        report.s = s;
        report.thm2 = one_design_bound(n);
        report.krasikov_floor = std::max(0, static_cast<int>(std::floor(n - krasikov_upper(s))));
        report.caveats.emplace_back(kCaveatKrasikov);
    } else {
        report.caveats.emplace_back("strength 0: no design bound applies");
    }
    if (report.strength >= 2) {
        auto thm1 = charlier_bound(n, report.strength);
        report.thm1 = thm1.bound;
        report.caveats.insert(report.caveats.end(), thm1.caveats.begin(), thm1.caveats.end());
    }
    if (report.transitivity >= 1) {
        report.cw = n - report.transitivity;
    }

    const std::pair<const char*, std::optional<int>> bounds[] = {
        {"thm1", report.thm1}, {"cw", report.cw}, {"thm2", report.thm2}};
    std::optional<int> smallest;
    for (const auto& [name, value] : bounds) {
        if (value && (!smallest || *value < *smallest)) {
            smallest = value;
            report.tightest = name;
        }
    }

    if (options.compute_exact) {
        const auto radius = covering_radius(set, options.radius);
        report.exact_radius = radius.radius;
        report.witness = radius.witness;
        report.radius_mode = to_string(radius.mode);
        report.caveats.insert(report.caveats.end(), radius.notes.begin(), radius.notes.end());
        for (const auto& [name, value] : bounds) {
            if (value && radius.radius > *value) {
                report.violations.emplace_back(name);
            }
        }
    }
    return report;
}

}  // namespace permdes
