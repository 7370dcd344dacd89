#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permdes {

/// Raised for invalid inputs: degree mismatches, malformed files, caps exceeded.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Letters are stored in one byte; degrees above this are rejected.
inline constexpr int kMaxDegree = 255;

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// Composition is fixed as (p * q)(x) = p(q(x)). The distance is independent
/// of the convention, but witnesses in reports are not.
class Permutation {
public:
    /// Validates that `images` is a bijection of 0..n-1 with n >= 1.
    explicit Permutation(std::vector<std::uint8_t> images);

    static Permutation identity(int n);
    /// From 1-based one-line notation.
    static Permutation from_one_based(std::span<const int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    std::uint8_t operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    std::span<const std::uint8_t> images() const { return images_; }

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

    /// 1-based one-line notation, single spaces.
    std::string to_string() const;

private:
    struct Unchecked {};
    Permutation(std::vector<std::uint8_t> images, Unchecked) : images_(std::move(images)) {}

    std::vector<std::uint8_t> images_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
};

/// r(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
int fixed_points(const Permutation& p);

/// d_S(p, q) = n - F(p q^{-1}) = number of letters where p and q disagree.
int distance(const Permutation& p, const Permutation& q);

/// Letters where the two image arrays agree; no composition is materialized.
inline int agreements(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b)
{
    int same = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        same += a[i] == b[i];
    }
    return same;
}

/// A non-empty, duplicate-free set of permutations of a common degree.
///
/// Element order is preserved as given; generated groups are stored in
/// lexicographic order.
class PermSet {
public:
    enum class GroupFlag { unknown, yes, no };

    PermSet(int n, std::vector<Permutation> elements);

    int degree() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& operator[](std::size_t i) const { return elements_[i]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    /// Closure under composition (finite, so inverses follow); cached.
    bool is_group() const;
    GroupFlag group_flag() const { return group_; }
    void mark_group(bool yes) const { group_ = yes ? GroupFlag::yes : GroupFlag::no; }

    bool contains(const Permutation& p) const;

    /// Copy with elements sorted lexicographically.
    PermSet sorted() const;

    /// {left * d} and {d * right}; the conjugate is {c d c^-1}.
    PermSet left_translate(const Permutation& left) const;
    PermSet conjugate(const Permutation& c) const;

private:
    int n_;
    std::vector<Permutation> elements_;
    mutable GroupFlag group_ = GroupFlag::unknown;
};

}  // namespace permdes
