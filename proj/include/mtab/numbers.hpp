#pragma once

#include <gmpxx.h>

#include <string>

namespace mtab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// "p/q" or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace mtab
