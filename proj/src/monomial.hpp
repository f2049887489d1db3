#pragma once

/* Monomial $c\,q^e$: a coefficient times a rational power of q.
 *
 * This is the argument type for theta and Appell specializations: every
 * two-variable identity in the corpus is checked at monomial values of the
 * second variable (x = -q^2, z = 2q, z = i q^5, ...).  The coefficient may be
 * any invertible ring element; rational non-unit coefficients such as 2 or 5
 * appear in generic z-specializations, roots of unity in the i / w
 * evaluations.
 *
 * Rational powers of a monomial exist only when the coefficient admits the
 * needed root; pow_rat supports half-integer exponents via exact square roots
 * and raises a branch error otherwise.  Integer powers always exist.
 */

#include "coeff.hpp"

namespace qsf {

struct Monomial {
    CycCoeff c;
    Rat e;

    Monomial(CycCoeff coeff, Rat exp) : c(std::move(coeff)), e(std::move(exp)) {}

    static Monomial qpow(const Rat& exp) { return Monomial(CycCoeff(Rat(1)), exp); }
    static Monomial constant(const CycCoeff& coeff) { return Monomial(coeff, Rat(0)); }

    bool is_zero() const { return c.is_zero(); }
    bool is_one() const { return c.is_one() && sgn(e) == 0; }

    Monomial times(const Monomial& o) const { return Monomial(c * o.c, e + o.e); }

    Monomial inverse() const {
        if (c.is_zero()) fail_eval("inverse of zero monomial");
        return Monomial(c.inverse(), -e);
    }

    Monomial pow_int(long k) const {
        if (k < 0) return inverse().pow_int(-k);
        return Monomial(c.pow(k), e * Rat(k));
    }

    /* m^r for rational r with denominator 1 or 2.  Half powers require an
     * exact square root of c^num; failure is a branch error, not silence. */
    Monomial pow_rat(const Rat& r) const {
        if (rat_is_integer(r)) return pow_int(rat_to_long(r, "monomial power"));
        if (r.get_den() != 2) fail_usage("monomial power with denominator > 2: " + r.get_str());
        if (c.is_zero()) fail_eval("fractional power of zero monomial");
        long num = int_to_long(r.get_num(), "monomial power");
        CycCoeff cn = c.pow(num);
        auto s = cn.sqrt();
        if (!s)
            fail_eval("no representable square root for coefficient " + cn.str() +
                      " (branch not expressible in conductors 1, 3, 4)");
        return Monomial(*s, e * r);
    }

    std::string str() const {
        std::string out = "(" + c.str() + ")";
        if (sgn(e) != 0) out += "*q^(" + e.get_str() + ")";
        return out;
    }
};

} // namespace qsf
