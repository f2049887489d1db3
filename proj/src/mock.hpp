#pragma once

/* Classical mock theta functions from their Eulerian series.
 *
 * Third order:
 *   $f_3(q) = \sum_{n\ge 0} q^{n^2}/(-q;q)_n^2$,
 *   $\omega_3(q) = \sum_{n\ge 0} q^{2n(n+1)}/(q;q^2)_{n+1}^2$.
 * Fifth order:
 *   $f_0(q) = \sum_{n\ge 0} q^{n^2}/(-q;q)_n$,
 *   $f_1(q) = \sum_{n\ge 0} q^{n(n+1)}/(-q;q)_n$,
 * with the universal building block
 *   $g(x;q) = x^{-1}\big({-1} + \sum_{n\ge 0} q^{n^2}/((x;q)_{n+1}(q/x;q)_n)\big)$.
 * Tenth order:
 *   $\phi_{10}(q) = \sum_{n\ge 0} q^{\binom{n+1}{2}}/(q;q^2)_{n+1}$,
 *   $\psi_{10}(q) = \sum_{n\ge 0} q^{\binom{n+2}{2}}/(q;q^2)_{n+1}$,
 *   $X_{10}(q) = \sum_{n\ge 0} (-1)^n q^{n^2}/(-q;q)_{2n}$,
 *   $\chi_{10}(q) = \sum_{n\ge 0} (-1)^n q^{(n+1)^2}/(-q;q)_{2n+1}$.
 *
 * These Eulerian sums are the single defining computation path; the Appell
 * function forms of the same objects live in the identity corpus as
 * independent cross-checks.  Each finite Pochhammer inverse is grown
 * incrementally: step n reuses the inverse from step n-1 and divides by the
 * one or two new factors, so the whole sum costs O(sqrt(T)) divisions.
 */

#include "qseries.hpp"

namespace qsf {

QSeries mock_f3(const Rat& T);
QSeries mock_omega3(const Rat& T);
QSeries mock_f0(const Rat& T);
QSeries mock_f1(const Rat& T);
QSeries mock_phi10(const Rat& T);
QSeries mock_psi10(const Rat& T);
QSeries mock_X10(const Rat& T);
QSeries mock_chi10(const Rat& T);

/* $g(x;q^\rho)$ at a generic monomial x */
QSeries mock_g(const Monomial& x, const Rat& rho, const Rat& T);

} // namespace qsf
