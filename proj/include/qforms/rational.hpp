#pragma once

// Exact rational scalars. All coefficient arithmetic in this project runs
// over GMP rationals; nothing is ever rounded. mpq_class keeps values in
// lowest terms with a positive denominator as long as every value entering
// arithmetic is canonical, so construction goes through the helpers below.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qforms {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "3", "-3", "5/12", "-5/12".
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("rat_parse: zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_num_long(const Rat& r) {
    if (!r.get_num().fits_slong_p())
        throw std::overflow_error("rat_num_long: numerator too large");
    return r.get_num().get_si();
}

inline long rat_den_long(const Rat& r) {
    if (!r.get_den().fits_slong_p())
        throw std::overflow_error("rat_den_long: denominator too large");
    return r.get_den().get_si();
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), ae);
    mpz_pow_ui(num.get_den().get_mpz_t(), base.get_den().get_mpz_t(), ae);
    if (e > 0) return num;
    if (base == 0) throw std::domain_error("rat_pow: zero base, negative exponent");
    Rat inv(num.get_den(), num.get_num());
    inv.canonicalize();
    return inv;
}

// Generalized binomial coefficient binom(a, k) = a(a-1)...(a-k+1)/k!.
inline Rat rat_binom(const Rat& a, unsigned long k) {
    Rat prod(1);
    for (unsigned long i = 0; i < k; ++i) prod *= (a - Rat(static_cast<long>(i)));
    return prod / Rat(factorial(k));
}

}  // namespace qforms
