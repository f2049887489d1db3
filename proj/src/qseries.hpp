#pragma once

/* Truncated Laurent series in $u = q^{1/D}$ with exact coefficients.
 *
 * A QSeries stores terms as (exponent numerator, coefficient) pairs over a
 * per-series denominator D, so the term (e, c) means $c\,q^{e/D}$.  The series
 * is known exactly for all exponents $\le$ trunc/D; anything above is unknown.
 * Two series with different D combine after rescaling to lcm, which leaves the
 * represented series unchanged.
 *
 * Truncation is tracked pessimistically through every operation:
 *   add:  min of the two truncations;
 *   mul:  min(Ta + min_b, Tb + min_a), the tightest order at which every
 *         contributing cross-term is still known (an empty operand counts with
 *         sentinel minimum T+1, the lowest exponent it could still contain);
 *   inv:  Ta - 2*min_a, since 1/a = c^{-1} q^{-m} (1 + u)^{-1} and the window
 *         of known u-offsets has length Ta - min_a.
 * An operation that cannot guarantee a coefficient refuses to report it:
 * comparisons beyond the tracked truncation raise an error rather than pass.
 *
 * The default D = 120 covers every fractional exponent the corpus needs to
 * start with (1/8, 1/24, 1/40, 5/2, ...); coarser or finer lattices arise by
 * lazy lcm upgrades.
 */

#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace qsf {

inline constexpr long kDefaultDenom = 120;

struct Term {
    long e;     /* exponent numerator over the series denom */
    CycCoeff c; /* nonzero */
};

struct Mismatch {
    Rat e;
    CycCoeff lhs, rhs;
};

class QSeries {
public:
    QSeries() = default;

    /* Factories.  trunc is the guaranteed-known order (inclusive). */
    static QSeries zero(int cond, const Rat& trunc, long denom = kDefaultDenom);
    static QSeries constant(const CycCoeff& c, const Rat& trunc, long denom = kDefaultDenom);
    static QSeries one(const Rat& trunc, long denom = kDefaultDenom);
    static QSeries from_monomial(const Monomial& m, const Rat& trunc, long denom = kDefaultDenom);
    /* (1 - c q^k), known exactly; trunc still records the usable window. */
    static QSeries binomial(const CycCoeff& c, const Rat& k, const Rat& trunc, long denom = kDefaultDenom);
    static QSeries from_terms(int cond, long denom, long trunc_num, std::vector<Term> terms);

    int conductor() const { return cond_; }
    long denom() const { return denom_; }
    long trunc_num() const { return trunc_num_; }
    Rat trunc() const { return make_rat(trunc_num_, denom_); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<Rat> min_exp() const;

    QSeries embedded(int cond) const;
    QSeries rescaled(long new_denom) const; /* new_denom must be a multiple of denom */
    QSeries truncated(const Rat& T) const;
    QSeries neg() const;
    QSeries scaled(const CycCoeff& c) const;
    QSeries shifted(const Monomial& m) const; /* multiply by an exact monomial */
    QSeries inverse() const;
    QSeries pow_int(long k) const;

    /* q -> c * q^M (M > 0).  c != 1 requires all exponents integral. */
    QSeries substituted(const CycCoeff& c, const Rat& M) const;

    /* Divide by (1 - c q^k) via the recurrence y_e = a_e + c y_{e-k}; k < 0 is
     * rewritten through 1/(1-w) = -w^{-1}/(1-w^{-1}); k = 0 divides by (1-c). */
    QSeries div_one_minus(const CycCoeff& c, const Rat& k) const;

    /* Multiply by (1 - c q^k), with exact truncation bookkeeping. */
    QSeries times_binomial(const CycCoeff& c, const Rat& k) const;

    /* Coefficient of q^e; zero off the stored support, error beyond trunc. */
    CycCoeff coeff_at(const Rat& e) const;

    /* Smallest differing exponent <= T, or nullopt if equal; error if either
     * truncation falls short of T. */
    static std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b, const Rat& T);

    /* Human-readable "c*q^e + ... + O(q^t)" in ascending exponent order. */
    std::string text() const;
    /* {"denom":D,"trunc":T,"ring":"Q","terms":[[e,"c"],...]}, canonicalized. */
    std::string to_json() const;
    static QSeries from_json(const std::string& s);

    friend QSeries operator+(const QSeries&, const QSeries&);
    friend QSeries operator-(const QSeries&, const QSeries&);
    friend QSeries operator*(const QSeries&, const QSeries&);

private:
    long exp_num(const Rat& e) const; /* exponent -> numerator over denom_; must be representable */

    int cond_ = 1;
    long denom_ = kDefaultDenom;
    long trunc_num_ = 0;
    std::vector<Term> terms_;
};

} // namespace qsf
