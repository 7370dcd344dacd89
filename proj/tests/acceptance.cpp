// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "permdes/bounds.hpp"
#include "permdes/charlier.hpp"
#include "permdes/cli.hpp"
#include "permdes/combinatorics.hpp"
#include "permdes/design.hpp"
#include "permdes/groups.hpp"
#include "permdes/radius.hpp"
#include "test_support.hpp"

using namespace permdes;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_seconds;  // <= 0: no limit
    std::function<Outcome()> check;
};

Outcome charlier_root_table()
{
    Outcome o;
    const auto x1 = largest_zero(1);
    const double x2 = largest_zero(2).midpoint().get_d();
    const double x3 = largest_zero(3).midpoint().get_d();
    const double x4 = largest_zero(4).midpoint().get_d();
    const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
    o.require(x1.exact() && x1.lo == 1, "x(1) != 1 exactly");
    o.require(std::fabs(x2 - golden) <= 1e-9, "x(2) differs from (3+sqrt5)/2 by more than 1e-9");
    o.require(std::fabs(x2 - 2.616) <= 0.01, "x(2) not within 0.01 of 2.616");
    o.require(std::fabs(x3 - 4.115) <= 0.005, "x(3) not within 0.005 of 4.115");
    o.require(std::fabs(x4 - 5.544) <= 0.005, "x(4) not within 0.005 of 5.544");
    std::ostringstream d;
    d.precision(12);
    d << "x(2)=" << x2 << " x(3)=" << x3 << " x(4)=" << x4;
    if (o.pass) o.detail = d.str();
    return o;
}

Outcome bound_table()
{
    Outcome o;
    const int n = 10;
    const int expected[] = {0, 0, n - 2, n - 3, n - 3, n - 5, n - 5, n - 6, n - 6};
    for (int t = 2; t <= 8; ++t) {
        const auto b = charlier_bound(n, t);
        o.require(b.bound == expected[t], "t=" + std::to_string(t) + " gave " + std::to_string(b.bound));
        o.require(b.caveats.empty() == (t != 2), "t=" + std::to_string(t) + " caveat flag wrong");
    }
    return o;
}

Outcome orthogonality()
{
    Outcome o;
    try {
        const auto report = verify_orthogonality(12, 6);
        o.require(report.entries.size() == 49, "expected 49 pairs");
        for (const auto& e : report.entries) {
            const Rational expected = e.r == e.s ? Rational(factorial(e.r)) : Rational(0);
            o.require(e.value == expected, "pair (" + std::to_string(e.r) + "," + std::to_string(e.s) + ")");
        }
    } catch (const std::exception& e) {
        o.require(false, e.what());
    }
    return o;
}

Outcome rencontres_identities()
{
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        std::vector<Integer> counted(static_cast<std::size_t>(n + 1), 0);
        Integer sum_d = 0, sum_d2 = 0;
        const auto perms = permdes::testing::all_image_arrays(n);
        for (const auto& p : perms) {
            int fixed = 0;
            for (int x = 0; x < n; ++x) {
                fixed += p[static_cast<std::size_t>(x)] == x;
            }
            counted[static_cast<std::size_t>(fixed)] += 1;
            sum_d += n - fixed;
            sum_d2 += (n - fixed) * (n - fixed);
        }
        const auto table = rencontres(n);
        const Integer total = factorial(n);
        const std::string at = " at n=" + std::to_string(n);
        o.require(table.w == counted, "table differs from enumeration" + at);
        Integer sum_w = 0;
        for (const auto& w : table.w) {
            sum_w += w;
        }
        o.require(sum_w == total, "sum w != n!" + at);
        if (n >= 2) {
            o.require(table.w[static_cast<std::size_t>(n - 1)] == 0, "w_{n-1} != 0" + at);
            o.require(space_moment(n, 2) == n * n - 2 * n + 2, "second moment" + at);
            o.require(make_rational(sum_d2, total) == n * n - 2 * n + 2, "enumerated second moment" + at);
        }
        o.require(space_moment(n, 1) == n - 1, "mean distance" + at);
        o.require(make_rational(sum_d, total) == n - 1, "enumerated mean distance" + at);
    }
    return o;
}

Outcome structure_theorem()
{
    Outcome o;
    std::vector<std::pair<std::string, int>> cases;
    for (int n = 4; n <= 7; ++n) {
        cases.emplace_back("symmetric", n);
        cases.emplace_back("alternating", n);
    }
    for (int n = 3; n <= 7; ++n) cases.emplace_back("cyclic", n);
    for (int n = 4; n <= 6; ++n) cases.emplace_back("dihedral", n);
    cases.emplace_back("agl1", 5);
    cases.emplace_back("agl1", 7);
    cases.emplace_back("pgl2", 5);

    std::string summary;
    for (const auto& [family, param] : cases) {
        const auto g = construct_named(family, param);
        const int strength = design_strength(g).strength;
        const int transitivity = transitivity_degree(g);
        o.require(strength == transitivity, family + " " + std::to_string(param) + ": strength " +
                                                std::to_string(strength) + " vs transitivity " +
                                                std::to_string(transitivity));
    }
    if (o.pass) o.detail = std::to_string(cases.size()) + " groups";
    return o;
}

Outcome cyclic_one_designs()
{
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
        const auto fv = frequencies(construct_named("cyclic", n));
        const std::string at = " at n=" + std::to_string(n);
        o.require(fv.f[static_cast<std::size_t>(n)] == make_rational(n - 1, n) || n == 1, "f_n" + at);
        o.require(design_moment(fv, 1) == n - 1, "sum j f_j" + at);
        o.require(is_one_design(fv), "not a 1-design" + at);
        for (int j = 1; j < n; ++j) {
            o.require(fv.f[static_cast<std::size_t>(j)] == 0, "f_j != 0 for 0<j<n" + at);
        }
    }
    return o;
}

Outcome bound_certification()
{
    Outcome o;
    auto exact_both = [&](const PermSet& g, const std::string& name) {
        const auto naive = covering_radius(g, {RadiusMode::naive});
        const auto coset = covering_radius(g, {RadiusMode::coset});
        o.require(coset.mode == RadiusMode::coset, name + ": coset mode did not run");
        o.require(naive.radius == coset.radius && naive.witness == coset.witness, name + ": naive != coset");
        return naive.radius;
    };

    const auto pgl = construct_named("pgl2", 5);
    o.require(design_strength(pgl).strength == 3 && transitivity_degree(pgl) == 3, "PGL(2,5) strength");
    const int pgl_radius = exact_both(pgl, "PGL(2,5)");
    const auto pgl_thm1 = charlier_bound(6, 3);
    o.require(pgl_thm1.bound == 3, "floor(6 - x(2)) != 3");
    o.require(pgl_radius <= pgl_thm1.bound, "PGL(2,5) radius exceeds thm1");
    o.require(pgl_radius <= 6 - 3, "PGL(2,5) radius exceeds n-t");

    const auto agl = construct_named("agl1", 7);
    o.require(design_strength(agl).strength == 2 && transitivity_degree(agl) == 2, "AGL(1,7) strength");
    const int agl_radius = exact_both(agl, "AGL(1,7)");
    const auto agl_thm1 = charlier_bound(7, 2);
    o.require(agl_thm1.bound == 5 && !agl_thm1.caveats.empty(), "AGL(1,7) flagged s=1 bound");
    o.require(agl_radius <= 5, "AGL(1,7) radius exceeds 5");
    o.require(agl_radius <= 7 - 2, "AGL(1,7) radius exceeds n-2");

    const auto c4 = construct_named("cyclic", 4);
    const int c4_radius = exact_both(c4, "cyclic 4");
    o.require(c4_radius == 2, "cyclic 4 radius != 2");
    o.require(one_design_bound(4) == 3 && c4_radius <= 3, "cyclic 4 exceeds thm2");

    if (o.pass) {
        o.detail = "rho(PGL(2,5))=" + std::to_string(pgl_radius) + " rho(AGL(1,7))=" + std::to_string(agl_radius) +
                   " rho(C4)=" + std::to_string(c4_radius);
    }
    return o;
}

Outcome annihilation()
{
    Outcome o;
    const auto pgl = verify_annihilation(construct_named("pgl2", 5), 3, 100);
    o.require(pgl.max_abs_residual <= 1e-8L, "PGL(2,5) residual above 1e-8");
    const auto z6 = verify_annihilation(construct_named("cyclic", 6), 3, 100);
    o.require(z6.max_abs_residual > 1e-3L, "cyclic 6 residual not above 1e-3");
    o.require(!z6.passed, "cyclic 6 claim was not rejected");
    std::ostringstream d;
    d << "PGL(2,5) max " << static_cast<double>(pgl.max_abs_residual) << ", C6 max "
      << static_cast<double>(z6.max_abs_residual);
    if (o.pass) o.detail = d.str();
    return o;
}

Outcome root_lemmas()
{
    Outcome o;
    for (int k = 1; k <= 30; ++k) {
        const auto poly = charlier_poly(k);
        const std::string at = " at k=" + std::to_string(k);
        if (k >= 2) {
            o.require(SturmSequence(poly).count_all() == k, "real root count" + at);
            o.require(sturm_count(poly, -1000000, 1000000) == k, "root count on (-1e6, 1e6]" + at);
            const int limit = static_cast<int>(std::ceil(k + 2 * std::sqrt(static_cast<double>(k)) + 1));
            o.require(integer_root_scan(k, limit).empty(), "integer root" + at);
        }
        const auto bracket = largest_zero(k);
        o.require(bracket.hi.get_d() < k + 2 * std::sqrt(static_cast<double>(k)) + 1, "Krasikov bound" + at);
    }
    return o;
}

std::string run_suite_json()
{
    const std::vector<std::vector<std::string>> invocations{
        {"report", "--family", "pgl2", "--p", "5", "--exact", "--trials", "100", "--format", "json"},
        {"report", "--family", "agl1", "--p", "7", "--exact", "--mode", "naive", "--jobs", "0", "--format", "json"},
        {"report", "--family", "cyclic", "--n", "4", "--exact", "--format", "json"},
        {"report", "--family", "alternating", "--n", "6", "--exact", "--format", "json"},
        {"strength", "--family", "dihedral", "--n", "6", "--format", "json"},
        {"radius", "--family", "cyclic", "--n", "7", "--mode", "naive", "--jobs", "0", "--format", "json"},
        {"charlier-roots", "--kmax", "12", "--format", "json"},
        {"bound", "--n", "10", "--tmax", "8", "--format", "json"},
        {"verify-orthogonality", "--n", "12", "--format", "json"},
        {"moments", "--family", "pgl2", "--p", "5", "--format", "json"},
    };
    std::ostringstream all;
    for (const auto& args : invocations) {
        std::ostringstream err;
        const int code = cli::run(args, all, err);
        all << "exit " << code << '\n' << err.str();
    }
    return all.str();
}

Outcome determinism()
{
    Outcome o;
    const auto first = run_suite_json();
    const auto second = run_suite_json();
    o.require(first == second, "outputs differ between runs");
    o.require(first.find("exit 1") == std::string::npos && first.find("exit 2") == std::string::npos,
              "an invocation failed");
    if (o.pass) o.detail = std::to_string(first.size()) + " bytes identical";
    return o;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Charlier root table", 1.0, charlier_root_table},
        {2, "Bound table at n=10", 0, bound_table},
        {3, "Reversed Charlier orthogonality, n=12, rmax=6", 1.0, orthogonality},
        {4, "Rencontres identities, n<=8", 0, rencontres_identities},
        {5, "Design strength equals transitivity degree", 60.0, structure_theorem},
        {6, "Cyclic groups are 1-designs with f_n=(n-1)/n", 0, cyclic_one_designs},
        {7, "Exact covering radii within the bounds", 30.0, bound_certification},
        {8, "Annihilation identity", 0, annihilation},
        {9, "Sturm root counts, no integer zeros, Krasikov bound, k<=30", 10.0, root_lemmas},
        {10, "Byte-identical repeated reports", 0, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (c.time_limit_seconds > 0 && elapsed.count() >= c.time_limit_seconds) {
            outcome.require(false, "took " + std::to_string(elapsed.count()) + " s");
        }
        failures += !outcome.pass;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  ("
                  << static_cast<long>(elapsed.count() * 1000) << " ms)";
        if (!outcome.detail.empty()) {
            std::cout << "  " << outcome.detail;
        }
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
