#pragma once

/* Thin helpers over GMP's exact rationals.
 *
 * All coefficient and exponent arithmetic in the library is exact; mpq_class
 * keeps values canonical (reduced, positive denominator) after every operation,
 * which makes equality structural.  These helpers add the handful of operations
 * gmpxx does not spell conveniently: floor/ceil to mpz, checked narrowing to
 * long, integer powers with negative exponents, and overflow-checked lcm for
 * exponent denominators.
 */

#include <gmpxx.h>
#include <numeric>
#include <string>

#include "error.hpp"

namespace qsf {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den) {
    if (den == 0) fail_usage("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline long int_to_long(const Int& z, const char* what) {
    if (!z.fits_slong_p()) fail_eval(std::string(what) + ": value out of machine range");
    return z.get_si();
}

/* Narrow an integer-valued rational to long; Usage error if it is not an integer. */
inline long rat_to_long(const Rat& r, const char* what) {
    if (!rat_is_integer(r)) fail_usage(std::string(what) + ": expected an integer, got " + r.get_str());
    return int_to_long(r.get_num(), what);
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/* base^e for integer e of either sign; 0^negative is an evaluation error. */
inline Rat rat_pow_int(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long ue = neg ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    if (neg && sgn(base) == 0) fail_eval("zero raised to a negative power");
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), ue);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), ue);
    r.canonicalize();
    if (neg) return Rat(1) / r;
    return r;
}

inline long lcm_long(long a, long b) {
    long g = std::gcd(a, b);
    long l = (a / g) * b;
    if (l < 0 || l > (1L << 46)) fail_eval("exponent denominator overflow in lcm");
    return l;
}

} // namespace qsf
