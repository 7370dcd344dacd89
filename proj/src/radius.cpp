#include "permdes/radius.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <thread>

namespace permdes {

namespace {

void check_degree_cap(const PermSet& set, int degree_cap)
{
    if (set.degree() > degree_cap) {
        throw Error("degree " + std::to_string(set.degree()) + " exceeds the enumeration cap of " +
                    std::to_string(degree_cap) + " (raise --cap, or use coset mode for groups)");
    }
    if (set.degree() > 20) {
        throw Error("exhaustive enumeration is limited to degree 20");
    }
}

/// Depth-first walk over S_n in lexicographic order that tracks, for every
/// element d of the set, how many positions sigma already agrees with d.
class AgreementSearch {
public:
    explicit AgreementSearch(const PermSet& set)
        : n_(set.degree()), size_(set.size()),
          postings_(static_cast<std::size_t>(n_ * n_)),
          agree_(size_, 0), images_(static_cast<std::size_t>(n_))
    {
        for (std::size_t idx = 0; idx < size_; ++idx) {
            const auto& d = set[idx];
            for (int k = 0; k < n_; ++k) {
                postings_[slot(k, d(k))].push_back(static_cast<std::uint32_t>(idx));
            }
        }
    }

    /// Visits leaves under the prefix sigma(0) = first (all leaves if first < 0).
    ///
    /// `bound(upper)` receives an upper bound on the min-distance of every
    /// completion and returns false to cut the subtree. `leaf(images, dist)`
    /// returns false to stop the walk.
    template <typename Bound, typename Leaf>
    void run(int first, Bound&& bound, Leaf&& leaf)
    {
        std::fill(agree_.begin(), agree_.end(), 0);
        stop_ = false;
        if (first < 0) {
            descend(0, 0, 0, bound, leaf);
        } else {
            const auto changed = assign(0, first, 0);
            descend(1, std::uint32_t{1} << first, changed, bound, leaf);
            unassign(0, first);
        }
    }

private:
    std::size_t slot(int position, int value) const
    {
        return static_cast<std::size_t>(position * n_ + value);
    }

    int assign(int position, int value, int max_agree)
    {
        images_[static_cast<std::size_t>(position)] = static_cast<std::uint8_t>(value);
        for (auto idx : postings_[slot(position, value)]) {
            max_agree = std::max(max_agree, ++agree_[idx]);
        }
        return max_agree;
    }

    void unassign(int position, int value)
    {
        for (auto idx : postings_[slot(position, value)]) {
            --agree_[idx];
        }
    }

    template <typename Bound, typename Leaf>
    void descend(int depth, std::uint32_t used, int max_agree, Bound& bound, Leaf& leaf)
    {
        // Agreements only grow, so n - max_agree bounds every completion.
        if (!bound(n_ - max_agree)) {
            return;
        }
        if (depth == n_) {
            stop_ = !leaf(std::span<const std::uint8_t>(images_), n_ - max_agree);
            return;
        }
        for (int v = 0; v < n_ && !stop_; ++v) {
            if (used & (std::uint32_t{1} << v)) {
                continue;
            }
            const int child_max = assign(depth, v, max_agree);
            descend(depth + 1, used | (std::uint32_t{1} << v), child_max, bound, leaf);
            unassign(depth, v);
        }
    }

    int n_;
    std::size_t size_;
    std::vector<std::vector<std::uint32_t>> postings_;
    std::vector<int> agree_;
    std::vector<std::uint8_t> images_;
    bool stop_ = false;
};

struct BlockBest {
    int radius = -1;
    std::vector<std::uint8_t> witness;
    std::size_t enumerated = 0;
};

BlockBest search_block(const PermSet& set, int first)
{
    AgreementSearch search(set);
    BlockBest best;
    const int n = set.degree();
    search.run(
        first, [&](int upper) { return upper > best.radius; },
        [&](std::span<const std::uint8_t> images, int dist) {
            ++best.enumerated;
            if (dist > best.radius) {
                best.radius = dist;
                best.witness.assign(images.begin(), images.end());
            }
            return dist < n;
        });
    return best;
}

/// Rank of a permutation in lexicographic order.
std::size_t lex_rank(std::span<const std::uint8_t> images, const std::vector<std::size_t>& factorials)
{
    const auto n = images.size();
    std::uint32_t used = 0;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned v = images[i];
        const auto smaller_used = static_cast<unsigned>(std::popcount(used & ((std::uint32_t{1} << v) - 1)));
        rank += (v - smaller_used) * factorials[n - 1 - i];
        used |= std::uint32_t{1} << v;
    }
    return rank;
}

RadiusResult covering_radius_coset(const PermSet& set)
{
    const int n = set.degree();
    const auto m = set.size();
    std::vector<std::size_t> factorials(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) {
        factorials[static_cast<std::size_t>(i)] = factorials[static_cast<std::size_t>(i - 1)] * static_cast<std::size_t>(i);
    }
    const std::size_t total = factorials[static_cast<std::size_t>(n)];

    std::vector<std::uint8_t> flat;
    flat.reserve(m * static_cast<std::size_t>(n));
    for (const auto& d : set) {
        flat.insert(flat.end(), d.images().begin(), d.images().end());
    }

    std::vector<bool> visited(total, false);
    std::vector<std::uint8_t> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), std::uint8_t{0});
    std::vector<std::uint8_t> product(static_cast<std::size_t>(n));

    RadiusResult result;
    result.mode = RadiusMode::coset;
    int best = -1;
    std::vector<std::uint8_t> witness;

    // sigma runs through S_n in lexicographic order, so the first unvisited
    // member of a coset is its least element.
    std::size_t rank = 0;
    do {
        if (!visited[rank]) {
            ++result.enumerated;
            int dmin = n;
            for (std::size_t j = 0; j < m && dmin > best; ++j) {
                std::span<const std::uint8_t> d(flat.data() + j * static_cast<std::size_t>(n), static_cast<std::size_t>(n));
                dmin = std::min(dmin, n - agreements(sigma, d));
            }
            if (dmin > best) {
                best = dmin;
                witness = sigma;
            }
            if (best == n) {
                break;
            }
            for (std::size_t j = 0; j < m; ++j) {
                const auto* h = flat.data() + j * static_cast<std::size_t>(n);
                for (int x = 0; x < n; ++x) {
                    product[static_cast<std::size_t>(x)] = sigma[h[x]];
                }
                visited[lex_rank(product, factorials)] = true;
            }
        }
        ++rank;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    result.radius = best;
    result.witness = Permutation(std::move(witness));
    return result;
}

}  // namespace

std::string to_string(RadiusMode mode)
{
    switch (mode) {
    case RadiusMode::automatic:
        return "auto";
    case RadiusMode::naive:
        return "naive";
    case RadiusMode::coset:
        return "coset";
    }
    return "unknown";
}

RadiusMode parse_radius_mode(const std::string& name)
{
    if (name == "auto") {
        return RadiusMode::automatic;
    }
    if (name == "naive") {
        return RadiusMode::naive;
    }
    if (name == "coset") {
        return RadiusMode::coset;
    }
    throw Error("unknown radius mode \"" + name + "\" (expected auto, naive or coset)");
}

RadiusResult covering_radius_naive(const PermSet& set, unsigned jobs, int degree_cap)
{
    check_degree_cap(set, degree_cap);
    const int n = set.degree();
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(n));

    std::vector<BlockBest> blocks(static_cast<std::size_t>(n));
    if (jobs <= 1) {
        for (int b = 0; b < n; ++b) {
            blocks[static_cast<std::size_t>(b)] = search_block(set, b);
        }
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (int b = static_cast<int>(w); b < n; b += static_cast<int>(jobs)) {
                    blocks[static_cast<std::size_t>(b)] = search_block(set, b);
                }
            });
        }
    }

    // Blocks are in lexicographic order; a later block wins only on a strictly
    // larger radius.
    RadiusResult result;
    result.mode = RadiusMode::naive;
    int best = -1;
    for (const auto& block : blocks) {
        result.enumerated += block.enumerated;
        if (block.radius > best) {
            best = block.radius;
            result.witness = Permutation(block.witness);
        }
    }
    result.radius = best;
    return result;
}

RadiusResult covering_radius(const PermSet& set, const RadiusOptions& options)
{
    check_degree_cap(set, options.degree_cap);
    switch (options.mode) {
    case RadiusMode::naive:
        return covering_radius_naive(set, options.jobs, options.degree_cap);
    case RadiusMode::coset:
        if (!set.is_group()) {
            auto result = covering_radius_naive(set, options.jobs, options.degree_cap);
            result.notes.push_back("coset mode needs a group; the set is not closed under composition, used naive");
            return result;
        }
        return covering_radius_coset(set);
    case RadiusMode::automatic:
        if (set.is_group()) {
            return covering_radius_coset(set);
        }
        return covering_radius_naive(set, options.jobs, options.degree_cap);
    }
    throw Error("unknown radius mode");
}

std::vector<std::pair<Permutation, int>> farthest_points(const PermSet& set, std::size_t k, int degree_cap)
{
    check_degree_cap(set, degree_cap);
    std::vector<std::pair<Permutation, int>> top;
    if (k == 0) {
        return top;
    }
    AgreementSearch search(set);
    // Leaves arrive in lexicographic order, so on equal distance the earlier
    // entry wins and a full list only admits strictly larger distances.
    auto threshold = [&] { return top.size() < k ? -1 : top.back().second; };
    search.run(
        -1, [&](int upper) { return upper > threshold(); },
        [&](std::span<const std::uint8_t> images, int dist) {
            if (dist <= threshold()) {
                return true;
            }
            auto pos = std::find_if(top.begin(), top.end(), [&](const auto& e) { return e.second < dist; });
            top.insert(pos, {Permutation(std::vector<std::uint8_t>(images.begin(), images.end())), dist});
            if (top.size() > k) {
                top.pop_back();
            }
            return true;
        });
    return top;
}

}  // namespace permdes
