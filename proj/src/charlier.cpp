#include "permdes/charlier.hpp"

#include "permdes/combinatorics.hpp"

namespace permdes {

IntPolynomial charlier_poly(int k)
{
    return charlier_table(k).back();
}

std::vector<IntPolynomial> charlier_table(int kmax)
{
    if (kmax < 0) {
        throw Error("Charlier degree must be non-negative");
    }
    std::vector<IntPolynomial> table;
    table.push_back(IntPolynomial::constant(1));
    if (kmax >= 1) {
        table.push_back(IntPolynomial::linear(1, -1));
    }
    for (int k = 1; k < kmax; ++k) {
        const auto& curr = table[static_cast<std::size_t>(k)];
        const auto& prev = table[static_cast<std::size_t>(k - 1)];
        table.push_back(IntPolynomial::linear(k + 1, -1) * curr - prev * Integer(k));
    }
    return table;
}

IntPolynomial reversed_charlier(int k, int n)
{
    return charlier_poly(k).compose_linear(Integer(n), Integer(-1));
}

Rational reversed_eval(int k, int n, const Rational& x)
{
    if (n < 1) {
        throw Error("degree n must be at least 1");
    }
    return charlier_poly(k).evaluate(Rational(Rational(n) - x));
}

Rational space_inner_product(int n, const std::vector<Rational>& f, const std::vector<Rational>& g)
{
    const auto size = static_cast<std::size_t>(n) + 1;
    if (f.size() != size || g.size() != size) {
        throw Error("value tables must cover 0.." + std::to_string(n));
    }
    const auto table = rencontres(n);
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        sum += Rational(table.sphere_size(k)) * f[i] * g[i];
    }
    return sum / Rational(factorial(n));
}

OrthogonalityReport verify_orthogonality(int n, int rmax)
{
    if (n < 1 || rmax < 0 || 2 * rmax > n) {
        throw Error("orthogonality holds for r, s <= n/2; got n=" + std::to_string(n) +
                    ", rmax=" + std::to_string(rmax));
    }
    const auto polys = charlier_table(rmax);
    std::vector<std::vector<Rational>> values;
    for (const auto& c : polys) {
        std::vector<Rational> row;
        for (int x = 0; x <= n; ++x) {
            row.push_back(Rational(c.evaluate(Rational(n - x))));
        }
        values.push_back(std::move(row));
    }

    OrthogonalityReport report{n, rmax, {}};
    for (int r = 0; r <= rmax; ++r) {
        for (int s = 0; s <= rmax; ++s) {
            OrthogonalityEntry e{r, s,
                                 space_inner_product(n, values[static_cast<std::size_t>(r)],
                                                     values[static_cast<std::size_t>(s)]),
                                 r == s ? Rational(factorial(r)) : Rational(0)};
            if (e.value != e.expected) {
                throw VerificationFailure("orthogonality fails at (r, s) = (" + std::to_string(r) + ", " +
                                          std::to_string(s) + "): got " + to_fraction(e.value) + ", expected " +
                                          to_fraction(e.expected));
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

Rational default_root_tolerance()
{
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 9);
    return Rational(Integer(1), den);
}

Integer root_search_ceiling(int k)
{
    Integer root;
    mpz_sqrt(root.get_mpz_t(), Integer(k).get_mpz_t());
    if (root * root < k) {
        root += 1;
    }
    return k + 2 * root + 2;
}

RootBracket largest_zero(int k, const Rational& tol)
{
    if (k < 1) {
        throw Error("largest zero needs k >= 1");
    }
    if (tol <= 0) {
        throw Error("root tolerance must be positive");
    }
    const auto poly = charlier_poly(k);
    if (poly.degree() == 1) {
        Rational root = -Rational(poly.coeff(0)) / Rational(poly.coeff(1));
        return {root, root};
    }

    const SturmSequence sturm(poly);
    const Rational ceiling(root_search_ceiling(k));
    Rational lo = 0;  // all zeros of C_k are positive and C_k(0) = 1
    Rational hi = ceiling;
    if (sgn(poly.evaluate(hi)) == 0 || sturm.variations(hi) != sturm.variations_at_plus_infinity()) {
        throw VerificationFailure("C_" + std::to_string(k) + " has a root beyond the Krasikov ceiling");
    }

    // Isolate the largest root: keep (lo, hi] holding exactly one root.
    while (sturm.count(lo, hi) > 1) {
        const Rational mid = (lo + hi) / 2;
        if (poly.evaluate(mid) == 0) {
            if (sturm.count(mid, hi) == 0) {
                return {mid, mid};
            }
            lo = mid;
            continue;
        }
        if (sturm.count(mid, hi) >= 1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Refine by sign; exactly one simple root lies in (lo, hi).
    const int sign_hi = sgn(poly.evaluate(hi));
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) / 2;
        const int s = sgn(poly.evaluate(mid));
        if (s == 0) {
            return {mid, mid};
        }
        if (s == sign_hi) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    if (sturm.count(lo, hi) != 1 || (hi < ceiling && sturm.count(hi, ceiling) != 0)) {
        throw VerificationFailure("failed to certify the bracket for x(" + std::to_string(k) + ")");
    }
    return {lo, hi};
}

std::vector<int> integer_root_scan(int k, int hi)
{
    if (k < 0 || hi < 0) {
        throw Error("integer root scan needs k >= 0 and hi >= 0");
    }
    const auto poly = charlier_poly(k);
    std::vector<int> roots;
    for (int m = 0; m <= hi; ++m) {
        if (poly.evaluate(Integer(m)) == 0) {
            roots.push_back(m);
        }
    }
    return roots;
}

}  // namespace permdes
