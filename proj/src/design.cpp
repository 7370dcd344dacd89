#include "permdes/design.hpp"

#include <algorithm>
#include <thread>

#include "permdes/combinatorics.hpp"

namespace permdes {

namespace {

FrequencyVector from_counts(int n, std::size_t size, const std::vector<std::uint64_t>& raw, const Integer& total)
{
    FrequencyVector fv;
    fv.n = n;
    fv.size = size;
    fv.counts.reserve(raw.size());
    fv.f.reserve(raw.size());
    for (auto c : raw) {
        Integer count;
        mpz_import(count.get_mpz_t(), 1, -1, sizeof(c), 0, 0, &c);
        fv.f.push_back(make_rational(count, total));
        fv.counts.push_back(std::move(count));
    }
    return fv;
}

Integer to_integer(std::size_t v)
{
    Integer out;
    const std::uint64_t raw = v;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(raw), 0, 0, &raw);
    return out;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x)
{
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

long double evaluate(const std::vector<long double>& coeffs, long double x)
{
    long double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

}  // namespace

FrequencyVector frequencies(const PermSet& set, unsigned jobs)
{
    const int n = set.degree();
    const std::size_t m = set.size();
    const std::size_t stride = static_cast<std::size_t>(n);

    std::vector<std::uint8_t> flat;
    flat.reserve(m * stride);
    for (const auto& p : set) {
        flat.insert(flat.end(), p.images().begin(), p.images().end());
    }

    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    // Small sets are not worth a thread.
    if (m < 256) {
        jobs = 1;
    }
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, m));

    // Unordered pairs i < j, doubled; the diagonal contributes m at distance 0.
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(stride + 1, 0));
    auto work = [&](unsigned block) {
        auto& local = partial[block];
        for (std::size_t i = block; i < m; i += jobs) {
            std::span<const std::uint8_t> row(flat.data() + i * stride, stride);
            for (std::size_t j = i + 1; j < m; ++j) {
                std::span<const std::uint8_t> other(flat.data() + j * stride, stride);
                ++local[stride - static_cast<std::size_t>(agreements(row, other))];
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned b = 0; b < jobs; ++b) {
            workers.emplace_back(work, b);
        }
    }

    std::vector<std::uint64_t> raw(stride + 1, 0);
    for (const auto& local : partial) {
        for (std::size_t k = 0; k <= stride; ++k) {
            raw[k] += 2 * local[k];
        }
    }
    raw[0] += m;
    const Integer size = to_integer(m);
    return from_counts(n, m, raw, size * size);
}

FrequencyVector point_distribution(const PermSet& set, const Permutation& point)
{
    if (point.degree() != set.degree()) {
        throw Error("degree mismatch between point and set");
    }
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(set.degree()) + 1, 0);
    for (const auto& d : set) {
        ++raw[static_cast<std::size_t>(distance(point, d))];
    }
    return from_counts(set.degree(), set.size(), raw, to_integer(set.size()));
}

Rational design_moment(const FrequencyVector& fv, int i)
{
    if (i < 0) {
        throw Error("moment order must be non-negative");
    }
    Rational sum = 0;
    for (int j = 0; j <= fv.n; ++j) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i));
        sum += fv.f[static_cast<std::size_t>(j)] * Rational(power);
    }
    return sum;
}

StrengthReport design_strength(const FrequencyVector& fv)
{
    StrengthReport report;
    report.n = fv.n;
    report.size = fv.size;
    for (int i = 1; i <= fv.n; ++i) {
        MomentPair pair{i, design_moment(fv, i), space_moment(fv.n, i)};
        const bool equal = pair.design == pair.space;
        report.moments.push_back(std::move(pair));
        if (!equal) {
            break;
        }
        report.strength = i;
    }
    report.is_one_design = report.strength >= 1;
    return report;
}

StrengthReport design_strength(const PermSet& set, unsigned jobs)
{
    return design_strength(frequencies(set, jobs));
}

bool is_one_design(const FrequencyVector& fv)
{
    return design_moment(fv, 1) == Rational(fv.n - 1);
}

bool is_one_design(const PermSet& set)
{
    return is_one_design(frequencies(set));
}

Rational design_expectation(const FrequencyVector& fv, const std::vector<Rational>& coeffs)
{
    Rational sum = 0;
    for (int i = 0; i <= fv.n; ++i) {
        const auto& weight = fv.f[static_cast<std::size_t>(i)];
        if (weight != 0) {
            sum += weight * evaluate(coeffs, Rational(i));
        }
    }
    return sum;
}

long double design_expectation(const FrequencyVector& fv, const std::vector<long double>& coeffs)
{
    long double sum = 0;
    for (int i = 0; i <= fv.n; ++i) {
        const auto& weight = fv.f[static_cast<std::size_t>(i)];
        if (weight != 0) {
            const auto value = static_cast<long double>(weight.get_num().get_d()) /
                               static_cast<long double>(weight.get_den().get_d());
            sum += value * evaluate(coeffs, static_cast<long double>(i));
        }
    }
    return sum;
}

Rational design_expectation(const PermSet& set, const std::vector<Rational>& coeffs)
{
    return design_expectation(frequencies(set), coeffs);
}

long double design_expectation(const PermSet& set, const std::vector<long double>& coeffs)
{
    return design_expectation(frequencies(set), coeffs);
}

Rational space_expectation(int n, const std::vector<Rational>& coeffs)
{
    const auto dist = space_distribution(n);
    Rational sum = 0;
    for (int i = 0; i <= n; ++i) {
        sum += dist[static_cast<std::size_t>(i)] * evaluate(coeffs, Rational(i));
    }
    return sum;
}

}  // namespace permdes
