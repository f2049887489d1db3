#pragma once

/* Admissible characters of the affine Lie algebra $A_1^{(1)}$ and their
 * string functions, computed two independent ways.
 *
 * For coprime $p \ge 1$, $p^{\prime} \ge 2$ the level is $N = p^{\prime}/p - 2$
 * and the character of spin $\ell$ is
 *   $\chi_{\ell}(z;q) = z^{-(\ell+1)/2} q^{p(\ell+1)^2/4p^{\prime}}
 *     \frac{j(-q^{p(\ell+1)+pp^{\prime}} z^{-p^{\prime}}; q^{2pp^{\prime}})
 *          - z^{\ell+1} j(-q^{-p(\ell+1)+pp^{\prime}} z^{-p^{\prime}}; q^{2pp^{\prime}})}
 *          {z^{-1/2} q^{1/8} j(z;q)}$,
 * whose string functions are the Fourier coefficients
 *   $\chi_{\ell}(z;q) = \sum_{m \equiv \ell (2)} C_{m,\ell}(q)\, q^{m^2/4N} z^{-m/2}$.
 *
 * string_C extracts that coefficient exactly in the annulus $|q| < |z| < 1$:
 * the numerator thetas contribute $z^{-p^{\prime}n}$ with quadratic
 * q-exponents, and
 *   $1/j(z;q) = \frac{1}{(q)_\infty} \sum_{a,b \ge 0}
 *               \frac{z^{a-b} q^{b}}{(q)_a (q)_b}$,
 * so a fixed z-power and q-order admit finitely many contributions, organized
 * through $U_c = \sum_{b \ge \max(0,-c)} q^b / ((q)_{b+c} (q)_b)$ together
 * with the reflection $U_{-c} = q^c U_c$.
 *
 * The normalized series
 *   $\mathcal{C}_{m,\ell} = q^{-s_{m,\ell}} C_{m,\ell}$,
 *   $s_{m,\ell} = -\tfrac18 + \frac{(\ell+1)^2}{4(N+2)} - \frac{m^2}{4N}$,
 * must land in Z[[q]]; normalization checks that.
 *
 * The remaining builders assemble the right-hand sides of the structural
 * identities for levels $p^{\prime} = 2p+j$: the quasi-periodic relation for
 * even spin, the polar-finite decomposition of the character, and the
 * cross-spin identity at $p^{\prime} = 2p+1$.
 */

#include "qseries.hpp"

namespace qsf {

struct Level {
    long p;
    long pprime;
};

/* validates coprimality and the ranges p >= 1, p' >= 2, N != 0 */
Level make_level(long p, long pprime);

Rat level_N(const Level& lv);

/* s_{m,l}: the fractional lead exponent of C_{m,l} */
Rat snorm(const Level& lv, long m, long ell);

/* +1 or -1 as (-1)^{kappa(r)} with kappa = 1 exactly for r = 2, 3 mod 6 */
int kappa_sign(long r);

/* chi_l(z;q) at a monomial z, direct theta-quotient evaluation */
QSeries char_weyl_kac(const Level& lv, long ell, const Monomial& z, const Rat& T);

/* C_{m,l}(q), fractional lead included */
QSeries string_C(const Level& lv, long m, long ell, const Rat& T);

/* mathcal C_{m,l}(q) = q^{-s_{m,l}} C_{m,l}(q), checked to lie in Z[[q]] */
QSeries string_C_normalized(const Level& lv, long m, long ell, const Rat& T);

/* RHS of the quasi-periodic relation for (q)^3_inf (C_{2jt+2s,2r} - C_{2s,2r})
 * at p' = 2p+j; t = 0 gives the empty sum, identically zero */
QSeries quasi_period_rhs(long p, long j, long t, long s, long r, const Rat& T);

/* RHS of the even-spin polar-finite decomposition of chi_{2r} at p' = 2p+j,
 * z a generic monomial; the C_{2s,2r} inputs come from string_C */
QSeries polar_finite_rhs(long p, long j, long r, const Monomial& z, const Rat& T);

/* RHS of the cross-spin identity for (q)^3_inf mathcal C_{0,2k} at p' = 2p+1 */
QSeries cross_spin_rhs(long p, long k, const Rat& T);

} // namespace qsf
