#include "permdes/groups.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace permdes {

namespace {

struct ImagesHash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto b : v) {
            h = (h ^ b) * 1099511628211ull;
        }
        return h;
    }
};

std::size_t factorial_capped(int n, std::size_t cap)
{
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::size_t>(i);
        if (f > cap) {
            return cap + 1;
        }
    }
    return f;
}

PermSet finish(int n, std::vector<Permutation> elements)
{
    std::sort(elements.begin(), elements.end());
    PermSet set(n, std::move(elements));
    set.mark_group(true);
    return set;
}

void require_degree(int n, int min_degree, const std::string& family)
{
    if (n < min_degree || n > kMaxDegree) {
        throw Error(family + " requires degree in [" + std::to_string(min_degree) + ", " +
                    std::to_string(kMaxDegree) + "], got " + std::to_string(n));
    }
}

void require_order(std::size_t order, std::size_t cap, const std::string& family)
{
    if (order > cap) {
        throw Error(family + " exceeds the size cap of " + std::to_string(cap) + " elements");
    }
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

bool is_even(const Permutation& p)
{
    // Parity from cycle count: sign = (-1)^(n - cycles).
    const int n = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int x = 0; x < n; ++x) {
        if (seen[static_cast<std::size_t>(x)]) {
            continue;
        }
        ++cycles;
        for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
            seen[static_cast<std::size_t>(y)] = true;
        }
    }
    return (n - cycles) % 2 == 0;
}

long long mod(long long a, long long p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

long long inverse_mod(long long a, long long p)
{
    // Fermat: a^(p-2).
    long long result = 1, base = mod(a, p), e = p - 2;
    while (e > 0) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

PermSet symmetric(int n, std::size_t cap)
{
    require_degree(n, 1, "symmetric");
    require_order(factorial_capped(n, cap), cap, "symmetric " + std::to_string(n));
    return finish(n, all_permutations(n));
}

PermSet alternating(int n, std::size_t cap)
{
    require_degree(n, 1, "alternating");
    require_order(factorial_capped(n, 2 * cap) / (n >= 2 ? 2 : 1), cap, "alternating " + std::to_string(n));
    auto all = all_permutations(n);
    std::vector<Permutation> even;
    even.reserve(all.size() / 2 + 1);
    for (auto& p : all) {
        if (is_even(p)) {
            even.push_back(std::move(p));
        }
    }
    return finish(n, std::move(even));
}

PermSet cyclic(int n)
{
    require_degree(n, 1, "cyclic");
    std::vector<Permutation> out;
    for (int shift = 0; shift < n; ++shift) {
        std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            images[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>((x + shift) % n);
        }
        out.emplace_back(std::move(images));
    }
    return finish(n, std::move(out));
}

PermSet dihedral(int n)
{
    require_degree(n, 3, "dihedral");
    std::vector<Permutation> out;
    for (int sign : {1, -1}) {
        for (int shift = 0; shift < n; ++shift) {
            std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) {
                images[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(mod(sign * x + shift, n));
            }
            out.emplace_back(std::move(images));
        }
    }
    return finish(n, std::move(out));
}

PermSet agl1(int p)
{
    if (!is_prime(p) || p > kMaxDegree) {
        throw Error("agl1 requires a prime p <= " + std::to_string(kMaxDegree) + ", got " + std::to_string(p));
    }
    std::vector<Permutation> out;
    for (int a = 1; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
            std::vector<std::uint8_t> images(static_cast<std::size_t>(p));
            for (int x = 0; x < p; ++x) {
                images[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>((a * x + b) % p);
            }
            out.emplace_back(std::move(images));
        }
    }
    return finish(p, std::move(out));
}

PermSet pgl2(int p, std::size_t cap)
{
    if (!is_prime(p) || p + 1 > kMaxDegree) {
        throw Error("pgl2 requires a prime p < " + std::to_string(kMaxDegree) + ", got " + std::to_string(p));
    }
    const long long q = p;
    require_order(static_cast<std::size_t>(q * (q * q - 1)), cap, "pgl2 " + std::to_string(p));
    const int n = p + 1;
    const long long infinity = q;

    std::set<std::vector<std::uint8_t>> seen;
    for (long long a = 0; a < q; ++a) {
        for (long long b = 0; b < q; ++b) {
            for (long long c = 0; c < q; ++c) {
                for (long long d = 0; d < q; ++d) {
                    if (mod(a * d - b * c, q) == 0) {
                        continue;
                    }
                    std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
                    for (long long x = 0; x < q; ++x) {
                        const long long den = mod(c * x + d, q);
                        images[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(
                            den == 0 ? infinity : mod((a * x + b) * inverse_mod(den, q), q));
                    }
                    images[static_cast<std::size_t>(infinity)] =
                        static_cast<std::uint8_t>(c == 0 ? infinity : mod(a * inverse_mod(c, q), q));
                    seen.insert(std::move(images));
                }
            }
        }
    }
    std::vector<Permutation> out;
    out.reserve(seen.size());
    for (const auto& images : seen) {
        out.emplace_back(images);
    }
    return finish(n, std::move(out));
}

/// Rank of an ordered tuple of distinct letters among all n!/(n-t)! such tuples.
class TupleRanker {
public:
    TupleRanker(int n, int t) : n_(n), t_(t), weights_(static_cast<std::size_t>(t))
    {
        // weights[i] = (n-i-1)! / (n-t)!
        std::size_t w = 1;
        for (int i = t - 1; i >= 0; --i) {
            weights_[static_cast<std::size_t>(i)] = w;
            w *= static_cast<std::size_t>(n - i);
        }
        count_ = w;
    }

    std::size_t count() const { return count_; }

    template <typename Tuple>
    std::size_t rank(const Tuple& tuple) const
    {
        std::uint64_t used = 0;
        std::size_t r = 0;
        for (int i = 0; i < t_; ++i) {
            const unsigned v = tuple[static_cast<std::size_t>(i)];
            const auto smaller_used = static_cast<unsigned>(std::popcount(used & ((std::uint64_t{1} << v) - 1)));
            r += (v - smaller_used) * weights_[static_cast<std::size_t>(i)];
            used |= std::uint64_t{1} << v;
        }
        return r;
    }

    int degree() const { return n_; }

private:
    int n_;
    int t_;
    std::vector<std::size_t> weights_;
    std::size_t count_ = 1;
};

/// Calls f(tuple) for every ordered t-tuple of distinct letters.
template <typename F>
void for_each_tuple(int n, int t, F&& f)
{
    std::vector<std::uint8_t> tuple(static_cast<std::size_t>(t));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto recurse = [&](auto&& self, int depth) -> bool {
        if (depth == t) {
            return f(tuple);
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) {
                continue;
            }
            used[static_cast<std::size_t>(v)] = true;
            tuple[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>(v);
            const bool keep_going = self(self, depth + 1);
            used[static_cast<std::size_t>(v)] = false;
            if (!keep_going) {
                return false;
            }
        }
        return true;
    };
    recurse(recurse, 0);
}

}  // namespace

bool is_prime(int p)
{
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

PermSet generate_group(int n, const std::vector<Permutation>& generators, std::size_t cap)
{
    for (const auto& g : generators) {
        if (g.degree() != n) {
            throw Error("generator degree " + std::to_string(g.degree()) + " does not match " + std::to_string(n));
        }
    }
    auto identity = Permutation::identity(n);
    std::unordered_set<std::vector<std::uint8_t>, ImagesHash> seen;
    std::vector<Permutation> elements;
    std::deque<std::size_t> frontier;

    auto visit = [&](Permutation p) {
        std::vector<std::uint8_t> key(p.images().begin(), p.images().end());
        if (!seen.insert(std::move(key)).second) {
            return;
        }
        if (elements.size() >= cap) {
            throw Error("group closure exceeds the size cap of " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(p));
        frontier.push_back(elements.size() - 1);
    };

    visit(identity);
    while (!frontier.empty()) {
        const auto index = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            visit(compose(elements[index], g));
        }
    }
    return finish(n, std::move(elements));
}

const std::vector<std::string>& named_families()
{
    static const std::vector<std::string> names{"symmetric", "alternating", "cyclic", "dihedral", "agl1", "pgl2"};
    return names;
}

PermSet construct_named(const std::string& family, int param, std::size_t cap)
{
    if (family == "symmetric") {
        return symmetric(param, cap);
    }
    if (family == "alternating") {
        return alternating(param, cap);
    }
    if (family == "cyclic") {
        return cyclic(param);
    }
    if (family == "dihedral") {
        return dihedral(param);
    }
    if (family == "agl1") {
        return agl1(param);
    }
    if (family == "pgl2") {
        return pgl2(param, cap);
    }
    throw Error("unsupported family \"" + family + "\"");
}

bool is_t_transitive(const PermSet& set, int t)
{
    const int n = set.degree();
    if (t < 0 || t > n) {
        return false;
    }
    if (t == 0) {
        return true;
    }
    if (n > 64) {
        throw Error("transitivity test supports degree <= 64");
    }
    TupleRanker ranker(n, t);
    const std::size_t tuples = ranker.count();
    if (set.size() < tuples) {
        return false;
    }

    // Row a of the witness matrix: which target tuples some element sends a to.
    std::vector<bool> reached(tuples);
    std::vector<std::uint8_t> image(static_cast<std::size_t>(t));
    bool transitive = true;
    for_each_tuple(n, t, [&](const std::vector<std::uint8_t>& source) {
        std::fill(reached.begin(), reached.end(), false);
        std::size_t hit = 0;
        for (const auto& d : set) {
            for (int i = 0; i < t; ++i) {
                image[static_cast<std::size_t>(i)] = d(source[static_cast<std::size_t>(i)]);
            }
            const auto r = ranker.rank(image);
            if (!reached[r]) {
                reached[r] = true;
                if (++hit == tuples) {
                    break;
                }
            }
        }
        transitive = hit == tuples;
        return transitive;
    });
    return transitive;
}

int transitivity_degree(const PermSet& set)
{
    int t = 0;
    while (t < set.degree() && is_t_transitive(set, t + 1)) {
        ++t;
    }
    return t;
}

}  // namespace permdes
