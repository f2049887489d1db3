#include "theta.hpp"

namespace qsf {

namespace {

/* Collect $\sum_n \text{sign}(n)\, c^n q^{E(n)}$ over the integers with
 * E convex; walks outward from an integer near the vertex in both directions
 * until E exceeds T.  The exponent callback returns the exact rational E(n),
 * the coefficient callback the exact term coefficient. */
template <typename ExpFn, typename CoeffFn>
QSeries convex_lattice_sum(long n_start, const ExpFn& E, const CoeffFn& coeff, long denom,
                           int cond, const Rat& T) {
    /* slide to the integer minimum first: convexity makes this safe */
    long n0 = n_start;
    while (E(n0 + 1) < E(n0)) ++n0;
    while (E(n0 - 1) < E(n0)) --n0;
    std::vector<Term> terms;
    long d = denom;
    auto push = [&](long n) {
        Rat e = E(n);
        if (e > T) return false;
        Rat en = e * d;
        if (!rat_is_integer(en)) fail_eval("theta exponent off the working lattice");
        terms.push_back({int_to_long(en.get_num(), "theta exponent"), coeff(n)});
        return true;
    };
    if (E(n0) <= T) {
        push(n0);
        for (long n = n0 + 1; push(n); ++n) {
        }
        for (long n = n0 - 1; push(n); --n) {
        }
    }
    return QSeries::from_terms(cond, d, int_to_long(rat_floor(T * d), "truncation"), std::move(terms));
}

long rat_lattice(std::initializer_list<const Rat*> exps) {
    long d = 1;
    for (const Rat* e : exps) d = lcm_long(d, int_to_long(e->get_den(), "exponent lattice"));
    return d;
}

} // namespace

QSeries poch_finite(const Monomial& x, const Rat& rho, long n, const Rat& T) {
    if (n < 0) fail_usage("finite Pochhammer length must be nonnegative");
    if (sgn(rho) <= 0) fail_usage("Pochhammer base exponent must be positive");
    QSeries acc = QSeries::one(T, 1);
    for (long i = 0; i < n; ++i) acc = acc.times_binomial(x.c, x.e + rho * i);
    return acc;
}

QSeries poch_inf(const Monomial& x, const Rat& rho, const Rat& T) {
    if (sgn(rho) <= 0) fail_usage("Pochhammer base exponent must be positive");
    if (sgn(x.e) < 0)
        fail_eval("infinite Pochhammer with decreasing exponents diverges: x = " + x.str());
    if (sgn(x.e) == 0 && x.c.is_one())
        fail_eval("infinite Pochhammer (1;q^rho) vanishes identically");
    QSeries acc = QSeries::one(T, 1);
    for (Rat e = x.e; e <= T; e += rho) acc = acc.times_binomial(x.c, e);
    return acc;
}

QSeries jtheta(const Monomial& x, const Rat& rho, const Rat& T) {
    if (sgn(rho) <= 0) fail_usage("theta base exponent must be positive");
    long d = rat_lattice({&rho, &x.e, &T});
    int cond = x.c.conductor();
    auto E = [&](long n) -> Rat { return rho * (n * (n - 1) / 2) + x.e * n; };
    auto C = [&](long n) {
        CycCoeff c = x.c.pow(n);
        return (n & 1) ? -c : c;
    };
    return convex_lattice_sum(0, E, C, d, cond, T);
}

QSeries euler_phi(const Rat& rho, const Rat& T) {
    /* $(q^a;q^a)_\infty = j(q^a;q^{3a})$, the pentagonal number theorem */
    return jtheta(Monomial::qpow(rho), rho * 3, T);
}

QSeries eta_series(const Rat& rho, const Rat& T) {
    Rat lead = rho / 24;
    return euler_phi(rho, T - lead).shifted(Monomial::qpow(lead));
}

QSeries theta_nm(long n, long m, const Monomial& z, const Rat& base, const Rat& T) {
    if (m <= 0) fail_usage("theta index m must be positive");
    if (sgn(base) <= 0) fail_usage("theta base exponent must be positive");
    /* j = k + n/2m, so q^{m j^2} z^{-mj} = q^{m j^2} z^{-mk} z^{-n/2} */
    Monomial pref = z.pow_rat(make_rat(-n, 2));
    Rat h = make_rat(n, 2 * m);
    auto jval = [&](long k) -> Rat { return Rat(k) + h; };
    auto E = [&](long k) -> Rat {
        Rat j = jval(k);
        return base * m * j * j + z.e * Rat(-m * k) + pref.e;
    };
    int cond = unify_conductor(z.c.conductor(), pref.c.conductor());
    auto C = [&](long k) { return (z.c.pow(-m * k) * pref.c).embedded(cond); };
    Rat quarter = make_rat(n * n, 4 * m) * base;
    long d = rat_lattice({&base, &z.e, &T, &pref.e, &quarter});
    return convex_lattice_sum(0, E, C, d, cond, T);
}

} // namespace qsf
