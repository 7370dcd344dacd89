#pragma once

#include <string>
#include <vector>

#include "permdes/exact.hpp"

namespace permdes {

/// Dense polynomial with coefficients in ascending degree, trailing zeros trimmed.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
    /// a + b x
    static Polynomial linear(Coeff a, Coeff b) { return Polynomial(std::vector<Coeff>{std::move(a), std::move(b)}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    Coeff coeff(int i) const
    {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : Coeff(0);
    }
    const Coeff& leading() const { return coeffs_.back(); }

    template <typename T>
    T evaluate(const T& x) const
    {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + T(*it);
        }
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<Coeff> out;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            out.push_back(coeffs_[i] * Coeff(static_cast<long>(i)));
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Coeff(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Coeff& c)
    {
        std::vector<Coeff> out = a.coeffs_;
        for (auto& v : out) v *= c;
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Substitute x -> shift + scale * x.
    Polynomial compose_linear(const Coeff& shift, const Coeff& scale) const
    {
        Polynomial result;
        const Polynomial arg = linear(shift, scale);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            result = result * arg + constant(*it);
        }
        return result;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Quotient and remainder of a by b (b nonzero).
std::pair<RatPolynomial, RatPolynomial> divide(const RatPolynomial& a, const RatPolynomial& b);

/// Human-readable form such as "-x^3 + 6x^2 - 8x + 1".
std::string to_string(const IntPolynomial& p);

/// Sturm chain P, P', -rem(P, P'), ...
class SturmSequence {
public:
    explicit SturmSequence(const IntPolynomial& p);

    /// Sign changes of the chain at x (zeros skipped).
    int variations(const Rational& x) const;
    int variations_at_plus_infinity() const;
    int variations_at_minus_infinity() const;

    /// Distinct real roots in (lo, hi]; both endpoints must be non-roots.
    int count(const Rational& lo, const Rational& hi) const;
    int count_all() const;

    const IntPolynomial& polynomial() const { return poly_; }

private:
    IntPolynomial poly_;
    std::vector<RatPolynomial> chain_;
};

/// Number of distinct real roots of p in (lo, hi].
int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

}  // namespace permdes
