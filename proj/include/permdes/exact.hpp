#pragma once

#include <gmpxx.h>

#include <string>

namespace permdes {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" with q >= 1 always written, so integers appear as "3/1".
inline std::string to_fraction(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace permdes
