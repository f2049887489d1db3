#include "appell.hpp"

#include "theta.hpp"
#include "walk.hpp"

namespace qsf {

namespace {

long lattice_of(std::initializer_list<const Rat*> exps) {
    long d = 1;
    for (const Rat* e : exps) d = lcm_long(d, int_to_long(e->get_den(), "exponent lattice"));
    return d;
}

long to_num(const Rat& e, long d) {
    Rat s = e * d;
    if (!rat_is_integer(s)) fail_eval("exponent off the working lattice in a bilateral sum");
    return int_to_long(s.get_num(), "exponent numerator");
}

/* Append the expansion of  pc * q^{pe} / (1 - c q^{ew})  to out, all exponents
 * kept <= T; direction of the geometric series follows the sign of ew. */
void append_geometric(std::vector<Term>& out, CycCoeff pc, const Rat& pe, const CycCoeff& c,
                      const Rat& ew, const Rat& T, long d, long index) {
    if (sgn(ew) == 0) {
        if (c.is_one())
            fail_eval("non-generic parameters: pole at summation index r = " + std::to_string(index));
        CycCoeff val = pc * (CycCoeff::one(c.conductor()) - c).inverse();
        if (pe <= T) out.push_back({to_num(pe, d), std::move(val)});
        return;
    }
    if (sgn(ew) > 0) {
        CycCoeff run = std::move(pc);
        for (Rat ex = pe; ex <= T; ex += ew) {
            out.push_back({to_num(ex, d), run});
            run = run * c;
        }
    } else {
        /* 1/(1-w) = -w^{-1}/(1-w^{-1}) = -sum_{k>=1} w^{-k} */
        Rat step = -ew;
        CycCoeff ci = c.inverse();
        CycCoeff run = -(pc * ci);
        for (Rat ex = pe + step; ex <= T; ex += step) {
            out.push_back({to_num(ex, d), run});
            run = run * ci;
        }
    }
}

/* numerator of m(x,z;q^rho): the bilateral sum before division by j(z;q^rho) */
QSeries appell_numerator(const Monomial& x, const Monomial& z, const Rat& rho, const Rat& T,
                         long d, int cond) {
    CycCoeff c = (x.c * z.c).embedded(cond);
    auto ew_of = [&](long r) -> Rat { return rho * (r - 1) + x.e + z.e; };
    auto pe_of = [&](long r) -> Rat { return rho * (r * (r - 1) / 2) + z.e * r; };
    auto fmin = [&](long r) {
        Rat ew = ew_of(r);
        Rat pe = pe_of(r);
        return sgn(ew) < 0 ? Rat(pe - ew) : pe;
    };
    std::vector<Term> terms;
    convex_bilateral_walk(fmin, T, [&](long r) {
        CycCoeff pc = z.c.pow(r).embedded(cond);
        if (r & 1) pc = -pc;
        append_geometric(terms, std::move(pc), pe_of(r), c, ew_of(r), T, d, r);
    });
    return QSeries::from_terms(cond, d, int_to_long(rat_floor(T * d), "truncation"), std::move(terms));
}

} // namespace

QSeries appell_m(const Monomial& x, const Monomial& z, const Rat& rho, const Rat& T) {
    if (sgn(rho) <= 0) fail_usage("Appell base exponent must be positive");
    if ((x.c * z.c).is_one()) {
        Rat pole_r = Rat(1) - (x.e + z.e) / rho;
        if (rat_is_integer(pole_r))
            fail_eval("non-generic Appell parameters x = " + x.str() + ", z = " + z.str() +
                      ": pole at summation index r = " + pole_r.get_str());
    }
    int cond = unify_conductor(x.c.conductor(), z.c.conductor());
    long d = lattice_of({&rho, &x.e, &z.e, &T});
    QSeries jz = jtheta(z, rho, T + 1);
    if (jz.is_zero())
        fail_eval("Appell denominator j(z;q^rho) vanishes to the working order at z = " + z.str());
    Rat mj = *jz.min_exp();
    Rat Ts = sgn(mj) > 0 ? Rat(T + mj) : T;
    QSeries S = appell_numerator(x, z, rho, Ts, d, cond);
    if (!S.is_zero()) {
        Rat Tj = T - *S.min_exp() + mj * 2;
        if (Tj > jz.trunc()) jz = jtheta(z, rho, Tj);
    }
    return S * jz.inverse();
}

QSeries bilateral_pf_sum(const Rat& e, const Rat& rho, const Rat& T) {
    if (sgn(rho) <= 0) fail_usage("bilateral sum base exponent must be positive");
    long d = lattice_of({&rho, &e, &T});
    CycCoeff minus_one(-1);
    auto ew_of = [&](long k) -> Rat { return rho * k + e; };
    auto pe_of = [&](long k) -> Rat { return rho * (k * (k + 1) / 2); };
    auto fmin = [&](long k) {
        Rat ew = ew_of(k);
        Rat pe = pe_of(k);
        return sgn(ew) < 0 ? Rat(pe - ew) : pe;
    };
    std::vector<Term> terms;
    convex_bilateral_walk(fmin, T, [&](long k) {
        CycCoeff pc((k & 1) ? -1 : 1);
        /* 1/(1+q^u) = 1/(1-(-1)q^u); u = 0 gives the constant 1/2 */
        append_geometric(terms, std::move(pc), pe_of(k), minus_one, ew_of(k), T, d, k);
    });
    return QSeries::from_terms(1, d, int_to_long(rat_floor(T * d), "truncation"), std::move(terms));
}

} // namespace qsf
