#include "permdes/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace permdes {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree()) {
        throw Error("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
    }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images))
{
    const auto n = images_.size();
    if (n == 0) {
        throw Error("permutation degree must be at least 1");
    }
    if (n > static_cast<std::size_t>(kMaxDegree)) {
        throw Error("permutation degree exceeds " + std::to_string(kMaxDegree));
    }
    std::vector<bool> seen(n, false);
    for (auto v : images_) {
        if (v >= n || seen[v]) {
            throw Error("not a bijection of 1.." + std::to_string(n));
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 1 || n > kMaxDegree) {
        throw Error("invalid degree " + std::to_string(n));
    }
    std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), std::uint8_t{0});
    return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_one_based(std::span<const int> images)
{
    std::vector<std::uint8_t> zero_based;
    zero_based.reserve(images.size());
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size())) {
            throw Error("not a bijection of 1.." + std::to_string(images.size()));
        }
        zero_based.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return Permutation(std::move(zero_based));
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(images_[i] + 1);
    }
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    require_same_degree(p, q);
    std::vector<std::uint8_t> r(q.images_.size());
    for (std::size_t x = 0; x < r.size(); ++x) {
        r[x] = p.images_[q.images_[x]];
    }
    return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p)
{
    std::vector<std::uint8_t> r(p.images_.size());
    for (std::size_t x = 0; x < r.size(); ++x) {
        r[p.images_[x]] = static_cast<std::uint8_t>(x);
    }
    return Permutation(std::move(r), Permutation::Unchecked{});
}

int fixed_points(const Permutation& p)
{
    int count = 0;
    for (int x = 0; x < p.degree(); ++x) {
        count += p(x) == x;
    }
    return count;
}

int distance(const Permutation& p, const Permutation& q)
{
    require_same_degree(p, q);
    // F(p q^-1) counts y = q(x) with p(x) = q(x).
    return p.degree() - agreements(p.images(), q.images());
}

PermSet::PermSet(int n, std::vector<Permutation> elements) : n_(n), elements_(std::move(elements))
{
    if (elements_.empty()) {
        throw Error("permutation set must be non-empty");
    }
    for (const auto& p : elements_) {
        if (p.degree() != n_) {
            throw Error("element of degree " + std::to_string(p.degree()) + " in set of degree " + std::to_string(n_));
        }
    }
    std::vector<const Permutation*> order;
    order.reserve(elements_.size());
    for (const auto& p : elements_) {
        order.push_back(&p);
    }
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return *a < *b; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (*order[i] == *order[i - 1]) {
            throw Error("duplicate permutation " + order[i]->to_string());
        }
    }
}

bool PermSet::contains(const Permutation& p) const
{
    return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

bool PermSet::is_group() const
{
    if (group_ != GroupFlag::unknown) {
        return group_ == GroupFlag::yes;
    }
    std::vector<Permutation> index = elements_;
    std::sort(index.begin(), index.end());
    auto member = [&](const Permutation& p) { return std::binary_search(index.begin(), index.end(), p); };

    bool closed = member(Permutation::identity(n_));
    for (std::size_t i = 0; closed && i < index.size(); ++i) {
        for (std::size_t j = 0; j < index.size(); ++j) {
            if (!member(compose(index[i], index[j]))) {
                closed = false;
                break;
            }
        }
    }
    mark_group(closed);
    return closed;
}

PermSet PermSet::sorted() const
{
    auto copy = elements_;
    std::sort(copy.begin(), copy.end());
    PermSet out(n_, std::move(copy));
    out.group_ = group_;
    return out;
}

PermSet PermSet::left_translate(const Permutation& left) const
{
    std::vector<Permutation> out;
    out.reserve(elements_.size());
    for (const auto& d : elements_) {
        out.push_back(compose(left, d));
    }
    return PermSet(n_, std::move(out));
}

PermSet PermSet::conjugate(const Permutation& c) const
{
    const auto c_inv = inverse(c);
    std::vector<Permutation> out;
    out.reserve(elements_.size());
    for (const auto& d : elements_) {
        out.push_back(compose(compose(c, d), c_inv));
    }
    PermSet result(n_, std::move(out));
    result.group_ = group_;
    return result;
}

}  // namespace permdes
