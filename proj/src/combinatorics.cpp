#include "permdes/combinatorics.hpp"

#include "permdes/permutation.hpp"

namespace permdes {

Integer derangements(int m)
{
    if (m < 0) {
        throw Error("derangements of a negative count");
    }
    Integer prev = 1;  // D_0
    Integer curr = 0;  // D_1
    if (m == 0) {
        return prev;
    }
    for (int k = 2; k <= m; ++k) {
        Integer next = (k - 1) * (curr + prev);
        prev = curr;
        curr = next;
    }
    return curr;
}

Integer factorial(int m)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return c;
}

RencontresTable rencontres(int n)
{
    if (n < 1) {
        throw Error("rencontres numbers need n >= 1");
    }
    RencontresTable table;
    table.n = n;
    table.w.reserve(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        table.w.push_back(binomial(n, k) * derangements(n - k));
    }
    return table;
}

std::vector<Rational> space_distribution(int n)
{
    const auto table = rencontres(n);
    const Integer total = factorial(n);
    std::vector<Rational> dist;
    dist.reserve(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        dist.push_back(make_rational(table.sphere_size(j), total));
    }
    return dist;
}

Rational space_moment(int n, int i)
{
    if (i < 0) {
        throw Error("moment order must be non-negative");
    }
    const auto table = rencontres(n);
    Integer sum = 0;
    for (int j = 0; j <= n; ++j) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i));
        sum += table.sphere_size(j) * power;
    }
    return make_rational(sum, factorial(n));
}

}  // namespace permdes
