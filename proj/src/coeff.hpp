#pragma once

/* Coefficient ring: exact elements of $\Q$, $\Q(i)$, or $\Q(\omega)$.
 *
 * Series coefficients live in a small cyclotomic field selected by a conductor
 * n in {1, 3, 4}.  Elements are stored in the power basis:
 *   n = 1:  a                    (one coordinate)
 *   n = 3:  a + b*w,  w^2 = -1-w   (w a primitive third root of unity)
 *   n = 4:  a + b*i,  i^2 = -1
 * with fully reduced rational coordinates, so equality is structural.  These
 * three fields are exactly what the identity corpus needs: i enters through
 * character evaluations at z = i and z = i q^5, and w through the tenth-order
 * identity that dissects psi10(w q).
 *
 * Arithmetic between mixed conductors embeds Q-valued elements into the wider
 * field automatically; a genuine i-versus-w mix is a usage error.
 */

#include <optional>
#include <string>

#include "rat.hpp"

namespace qsf {

/* Common conductor for combining two elements; {1,n} widens to n, 3 vs 4 is an error. */
int unify_conductor(int a, int b);

class CycCoeff {
public:
    CycCoeff() : cond_(1), a_(0), b_(0) {}
    explicit CycCoeff(const Rat& r) : cond_(1), a_(r), b_(0) {}
    explicit CycCoeff(long n) : cond_(1), a_(n), b_(0) {}

    static CycCoeff rational(const Rat& r) { return CycCoeff(r); }
    static CycCoeff gauss(const Rat& re, const Rat& im);       /* re + im*i  */
    static CycCoeff eisenstein(const Rat& a, const Rat& b);    /* a + b*w    */
    static CycCoeff unit_i() { return gauss(Rat(0), Rat(1)); }
    static CycCoeff unit_omega() { return eisenstein(Rat(0), Rat(1)); }
    static CycCoeff zero(int cond);
    static CycCoeff one(int cond);

    int conductor() const { return cond_; }
    const Rat& c0() const { return a_; }
    const Rat& c1() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
    /* True when the value lies in Q (second coordinate zero), whatever the conductor. */
    bool is_rational_value() const { return sgn(b_) == 0; }
    Rat rat_value() const;

    /* Value-preserving move to another conductor; non-rational values cannot cross 3 <-> 4. */
    CycCoeff embedded(int cond) const;

    CycCoeff operator-() const;
    CycCoeff inverse() const;
    CycCoeff pow(long e) const;

    /* Exact square root when one exists in a supported conductor: positive
     * rational perfect squares; negative rationals via i; pure w and w^2
     * multiples by root-of-unity rotation.  nullopt otherwise. */
    std::optional<CycCoeff> sqrt() const;

    /* Serialization: "a/b", "a/b+c/d*i", "a/b+c/d*w"; zero components omitted; "0". */
    std::string str() const;
    static CycCoeff parse(const std::string& text, int cond);

    friend CycCoeff operator+(const CycCoeff&, const CycCoeff&);
    friend CycCoeff operator-(const CycCoeff&, const CycCoeff&);
    friend CycCoeff operator*(const CycCoeff&, const CycCoeff&);
    friend CycCoeff operator/(const CycCoeff&, const CycCoeff&);
    friend bool operator==(const CycCoeff&, const CycCoeff&);
    friend bool operator!=(const CycCoeff& x, const CycCoeff& y) { return !(x == y); }

private:
    CycCoeff(int cond, Rat a, Rat b) : cond_(cond), a_(std::move(a)), b_(std::move(b)) {}

    int cond_;   /* 1, 3, or 4 */
    Rat a_, b_;  /* b_ is identically 0 when cond_ == 1 */
};

} // namespace qsf
