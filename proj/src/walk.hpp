#pragma once

/* Shared summation control utilities.
 *
 * convex_bilateral_walk enumerates exactly the integers whose convex bound
 * fmin lies at or below the target order: slide to the integer minimum, then
 * walk outward in both directions.  Used by every bilateral q-series sum so
 * that no summation range is ever guessed.
 *
 * to_order retries an assembly until its guaranteed truncation order reaches
 * the request.  The pessimistic truncation bookkeeping makes any shortfall
 * linear in the working order, so the second attempt already lands; the loop
 * exists to keep the argument airtight rather than to search.
 */

#include "qseries.hpp"

namespace qsf {

template <typename FminFn, typename AddFn>
void convex_bilateral_walk(const FminFn& fmin, const Rat& T, const AddFn& add_r) {
    long r0 = 0;
    while (fmin(r0 + 1) < fmin(r0)) ++r0;
    while (fmin(r0 - 1) < fmin(r0)) --r0;
    if (fmin(r0) > T) return;
    add_r(r0);
    for (long r = r0 + 1; fmin(r) <= T; ++r) add_r(r);
    for (long r = r0 - 1; fmin(r) <= T; --r) add_r(r);
}

template <typename BuildFn>
QSeries to_order(const Rat& T, const BuildFn& build) {
    Rat W = T;
    for (int attempt = 0; attempt < 6; ++attempt) {
        QSeries s = build(W);
        if (s.trunc() >= T) return s;
        W += T - s.trunc() + 1;
    }
    fail_eval("assembly kept falling short of the requested order " + T.get_str());
}

} // namespace qsf
