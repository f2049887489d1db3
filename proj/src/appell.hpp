#pragma once

/* Appell functions at monomial arguments,
 *   $m(x,z;q) = \frac{1}{j(z;q)} \sum_{r\in\mathbb{Z}}
 *               \frac{(-1)^r q^{\binom{r}{2}} z^r}{1 - q^{r-1} x z}$,
 * plus the bilateral partial-fraction sum
 *   $\sum_{k\in\mathbb{Z}} \frac{(-1)^k q^{\rho\binom{k+1}{2}}}{1 + q^{\rho k + e}}$
 * that equals $J_\rho^3 / j(-q^e;q^\rho)$.
 *
 * Each denominator $1 - w$ is expanded geometrically in the direction that
 * makes exponents increase: $\sum_{k\ge 0} w^k$ when the exponent of w is
 * positive, $-\sum_{k\ge 1} w^{-k}$ when it is negative, and the constant
 * $1/(1-c)$ when w is the constant c != 1.  A term with w = 1 exactly is a
 * genuine pole of the definition; that raises a non-generic-parameter error
 * naming the offending summation index.
 *
 * The r-range is never a fixed window: the minimal exponent contributed by
 * term r is convex in r, so the sum walks outward from the integer minimum
 * until the bound exceeds the target order.
 */

#include "qseries.hpp"

namespace qsf {

/* $m(x, z; q^\rho)$ to guaranteed order T */
QSeries appell_m(const Monomial& x, const Monomial& z, const Rat& rho, const Rat& T);

/* $\sum_{k\in\mathbb{Z}} (-1)^k q^{\rho k(k+1)/2} / (1 + q^{\rho k + e})$ to order T */
QSeries bilateral_pf_sum(const Rat& e, const Rat& rho, const Rat& T);

} // namespace qsf
