#include "mock.hpp"

namespace qsf {

namespace {

/* Sum over n >= 0 of  term(n) * inv_n, where inv_n extends inv_{n-1} by the
 * divisor factors grow(n) adds, and term(n) is a monomial whose exponent is
 * eventually increasing.  Stops once term(n) alone lies above T, which is
 * valid whenever the running inverse has no negative exponents; every divisor
 * used below has a positive q-power. */
template <typename TermFn, typename GrowFn>
QSeries eulerian_sum(const TermFn& term, const GrowFn& grow, const Rat& T) {
    QSeries acc = QSeries::zero(1, T, 1);
    QSeries inv = QSeries::one(T, 1);
    for (long n = 0;; ++n) {
        inv = grow(std::move(inv), n);
        Monomial t = term(n);
        if (t.e > T) break;
        acc = acc + inv.shifted(t);
    }
    return acc;
}

Monomial plain(long e) { return Monomial::qpow(Rat(e)); }

Monomial signed_term(long n, long e) { return Monomial(CycCoeff((n & 1) ? -1 : 1), Rat(e)); }

} // namespace

QSeries mock_f3(const Rat& T) {
    CycCoeff minus_one(-1);
    return eulerian_sum([](long n) { return plain(n * n); },
                        [&](QSeries inv, long n) {
                            if (n == 0) return inv;
                            return inv.div_one_minus(minus_one, Rat(n)).div_one_minus(minus_one, Rat(n));
                        },
                        T);
}

QSeries mock_omega3(const Rat& T) {
    CycCoeff one(1);
    return eulerian_sum([](long n) { return plain(2 * n * (n + 1)); },
                        [&](QSeries inv, long n) {
                            return inv.div_one_minus(one, Rat(2 * n + 1)).div_one_minus(one, Rat(2 * n + 1));
                        },
                        T);
}

QSeries mock_f0(const Rat& T) {
    CycCoeff minus_one(-1);
    return eulerian_sum([](long n) { return plain(n * n); },
                        [&](QSeries inv, long n) {
                            if (n == 0) return inv;
                            return inv.div_one_minus(minus_one, Rat(n));
                        },
                        T);
}

QSeries mock_f1(const Rat& T) {
    CycCoeff minus_one(-1);
    return eulerian_sum([](long n) { return plain(n * (n + 1)); },
                        [&](QSeries inv, long n) {
                            if (n == 0) return inv;
                            return inv.div_one_minus(minus_one, Rat(n));
                        },
                        T);
}

QSeries mock_phi10(const Rat& T) {
    CycCoeff one(1);
    return eulerian_sum([](long n) { return plain(n * (n + 1) / 2); },
                        [&](QSeries inv, long n) { return inv.div_one_minus(one, Rat(2 * n + 1)); },
                        T);
}

QSeries mock_psi10(const Rat& T) {
    CycCoeff one(1);
    return eulerian_sum([](long n) { return plain((n + 1) * (n + 2) / 2); },
                        [&](QSeries inv, long n) { return inv.div_one_minus(one, Rat(2 * n + 1)); },
                        T);
}

QSeries mock_X10(const Rat& T) {
    CycCoeff minus_one(-1);
    return eulerian_sum([](long n) { return signed_term(n, n * n); },
                        [&](QSeries inv, long n) {
                            if (n == 0) return inv;
                            return inv.div_one_minus(minus_one, Rat(2 * n - 1))
                                .div_one_minus(minus_one, Rat(2 * n));
                        },
                        T);
}

QSeries mock_chi10(const Rat& T) {
    CycCoeff minus_one(-1);
    return eulerian_sum([](long n) { return signed_term(n, (n + 1) * (n + 1)); },
                        [&](QSeries inv, long n) {
                            if (n == 0) return inv.div_one_minus(minus_one, Rat(1));
                            return inv.div_one_minus(minus_one, Rat(2 * n))
                                .div_one_minus(minus_one, Rat(2 * n + 1));
                        },
                        T);
}

QSeries mock_g(const Monomial& x, const Rat& rho, const Rat& T) {
    if (sgn(rho) <= 0) fail_usage("universal mock theta base exponent must be positive");
    if (x.c.is_zero()) fail_usage("universal mock theta needs an invertible argument");
    /* the leading x^{-1} shifts exponents down by x.e; widen the target to match */
    Rat Ti = sgn(x.e) > 0 ? Rat(T + x.e) : T;
    QSeries acc = QSeries::constant(CycCoeff(-1), Ti, 1);
    QSeries inv = QSeries::one(Ti, 1);
    CycCoeff xi = x.c.inverse();
    for (long n = 0;; ++n) {
        /* extend (x;q^rho)_{n+1} and, for n >= 1, (q^rho/x;q^rho)_n */
        inv = inv.div_one_minus(x.c, x.e + rho * n);
        if (n > 0) inv = inv.div_one_minus(xi, rho * n - x.e);
        Rat floor_exp = rho * (n * n);
        if (auto m = inv.min_exp()) floor_exp += *m;
        if (floor_exp > Ti) break;
        acc = acc + inv.shifted(Monomial::qpow(rho * (n * n)));
    }
    return acc.shifted(Monomial(xi, -x.e));
}

} // namespace qsf
