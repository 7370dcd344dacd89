#include "permdes/polynomial.hpp"

#include "permdes/permutation.hpp"

namespace permdes {

namespace {

int sign(const Rational& v)
{
    return sgn(v);
}

int count_variations(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

}  // namespace

RatPolynomial to_rational(const IntPolynomial& p)
{
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.emplace_back(c);
    }
    return RatPolynomial(std::move(out));
}

std::pair<RatPolynomial, RatPolynomial> divide(const RatPolynomial& a, const RatPolynomial& b)
{
    if (b.is_zero()) {
        throw Error("polynomial division by zero");
    }
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) {
        return {RatPolynomial{}, a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    for (int d = a.degree(); d >= db; --d) {
        const Rational factor = rem[static_cast<std::size_t>(d)] / b.leading();
        quot[static_cast<std::size_t>(d - db)] = factor;
        if (factor == 0) {
            continue;
        }
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(d - db + i)] -= factor * b.coeffs()[static_cast<std::size_t>(i)];
        }
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

std::string to_string(const IntPolynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Integer c = p.coeff(d);
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        c = abs(c);
        if (c != 1 || d == 0) {
            out += c.get_str();
        }
        if (d >= 1) {
            out += "x";
        }
        if (d >= 2) {
            out += "^" + std::to_string(d);
        }
    }
    return out;
}

SturmSequence::SturmSequence(const IntPolynomial& p) : poly_(p)
{
    if (p.is_zero()) {
        throw Error("Sturm sequence of the zero polynomial");
    }
    chain_.push_back(to_rational(p));
    auto next = chain_.back().derivative();
    while (!next.is_zero()) {
        chain_.push_back(next);
        auto remainder = divide(chain_[chain_.size() - 2], chain_.back()).second;
        next = remainder * Rational(-1);
    }
}

int SturmSequence::variations(const Rational& x) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        signs.push_back(sign(q.evaluate(x)));
    }
    return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const
{
    std::vector<int> signs;
    for (const auto& q : chain_) {
        signs.push_back(sign(q.leading()));
    }
    return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const
{
    std::vector<int> signs;
    for (const auto& q : chain_) {
        signs.push_back(q.degree() % 2 == 0 ? sign(q.leading()) : -sign(q.leading()));
    }
    return count_variations(signs);
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const
{
    if (lo >= hi) {
        return 0;
    }
    if (poly_.evaluate(lo) == 0 || poly_.evaluate(hi) == 0) {
        throw Error("Sturm count endpoint is a root; perturb the interval");
    }
    return variations(lo) - variations(hi);
}

int SturmSequence::count_all() const
{
    return variations_at_minus_infinity() - variations_at_plus_infinity();
}

int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi)
{
    return SturmSequence(p).count(lo, hi);
}

}  // namespace permdes
