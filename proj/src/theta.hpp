#pragma once

/* Theta functions, Pochhammer symbols and the Dedekind eta-function.
 *
 * The workhorse is the Jacobi triple product
 *   $j(x;q) = (x;q)_\infty (q/x;q)_\infty (q;q)_\infty
 *           = \sum_{n\in\mathbb{Z}} (-1)^n q^{\binom{n}{2}} x^n$,
 * evaluated at monomial x with the bilateral sum cut off analytically: the
 * exponent $\binom{n}{2}\rho + n\,e_x$ is an upward parabola in n, so the
 * contributing n form one contiguous interval found by walking outward from
 * the integer vertex.  No scan-until-quiet heuristics anywhere.
 *
 * Named abbreviations follow the corpus conventions
 *   $J_{a,b} = j(q^a;q^b)$, $\overline{J}_{a,b} = j(-q^a;q^b)$,
 *   $J_a = J_{a,3a} = (q^a;q^a)_\infty$,
 * the last equality being Euler's pentagonal number theorem, which is also how
 * euler_phi gets its terms without multiplying out the product.
 *
 * The lattice theta function
 *   $\Theta_{n,m}(z;q) = \sum_{j\in\mathbb{Z}+\frac{n}{2m}} q^{mj^2} z^{-mj}$
 * carries half-integer powers of z when n is odd; those powers exist only when
 * the coefficient of z has an exact square root, and the evaluation reports a
 * branch error otherwise.
 */

#include "qseries.hpp"

namespace qsf {

/* $(x;q^\rho)_n = \prod_{i=0}^{n-1}(1 - x q^{\rho i})$, exact */
QSeries poch_finite(const Monomial& x, const Rat& rho, long n, const Rat& T);

/* $(x;q^\rho)_\infty$; requires x.e > 0, or x.e = 0 with coefficient != 1 */
QSeries poch_inf(const Monomial& x, const Rat& rho, const Rat& T);

/* $j(x;q^\rho)$ by the triple-product sum */
QSeries jtheta(const Monomial& x, const Rat& rho, const Rat& T);

/* $(q^\rho;q^\rho)_\infty$ via pentagonal numbers */
QSeries euler_phi(const Rat& rho, const Rat& T);

/* $\eta(q^\rho) = q^{\rho/24} (q^\rho;q^\rho)_\infty$ */
QSeries eta_series(const Rat& rho, const Rat& T);

/* $\Theta_{n,m}(z;q^{base})$ over the shifted lattice $\mathbb{Z}+n/2m$ */
QSeries theta_nm(long n, long m, const Monomial& z, const Rat& base, const Rat& T);

} // namespace qsf
