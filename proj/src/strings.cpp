#include "strings.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "appell.hpp"
#include "theta.hpp"
#include "walk.hpp"

namespace qsf {

namespace {

Rat binom2(long n) { return Rat(n * (n - 1) / 2); }

void validate_string_id(const Level& lv, long m, long ell) {
    if (ell < 0 || ell > lv.pprime - 2)
        fail_usage("spin must lie between 0 and p' - 2, got " + std::to_string(ell));
    if (((m - ell) % 2 + 2) % 2 != 0)
        fail_usage("quantum number and spin must have equal parity");
}

/* $U_c = \sum_{b \ge \max(0,-c)} q^b/((q)_{b+c}(q)_b)$, with the reflection
 * $U_{-c} = q^c U_c$; the two Pochhammer inverses grow one factor per step */
class UCache {
public:
    explicit UCache(const Rat& T) : T_(T) {}

    const QSeries& get(long c) {
        auto it = map_.find(c);
        if (it != map_.end()) return it->second;
        QSeries u = c < 0 ? get(-c).shifted(Monomial::qpow(Rat(-c))) : compute(c);
        return map_.emplace(c, std::move(u)).first->second;
    }

private:
    QSeries compute(long c) const {
        CycCoeff one(1);
        QSeries inv = QSeries::one(T_, 1);
        for (long i = 1; i <= c; ++i) inv = inv.div_one_minus(one, Rat(i));
        QSeries acc = QSeries::zero(1, T_, 1);
        long bmax = int_to_long(rat_floor(T_), "oracle order");
        for (long b = 0; b <= bmax; ++b) {
            if (b > 0) inv = inv.div_one_minus(one, Rat(b)).div_one_minus(one, Rat(b + c));
            acc = acc + inv.shifted(Monomial::qpow(Rat(b)));
        }
        return acc;
    }

    Rat T_;
    std::map<long, QSeries> map_;
};

/* $q^{-s_{m,\ell}} C_{m,\ell}$ before any integrality check: the z^{-m/2}
 * Fourier coefficient of the character with its fractional lead stripped */
QSeries string_core(const Level& lv, long m, long ell, const Rat& T) {
    long p = lv.p, pp = lv.pprime;
    UCache U(T);
    QSeries acc = QSeries::zero(1, T, 1);
    auto add_family = [&](int sign, auto&& cE, auto&& cC) {
        auto fmin = [&](long n) -> Rat {
            Rat e = cE(n);
            long c = cC(n);
            if (c < 0) e += Rat(-c);
            return e;
        };
        convex_bilateral_walk(fmin, T, [&](long n) {
            QSeries t = U.get(cC(n)).shifted(Monomial::qpow(cE(n)));
            acc = acc + (sign < 0 ? t.neg() : t);
        });
    };
    add_family(
        +1, [&](long n) -> Rat { return Rat(p * pp * n * n + p * (ell + 1) * n); },
        [&](long n) { return (ell - m) / 2 + pp * n; });
    add_family(
        -1, [&](long n) -> Rat { return Rat(p * pp * n * n - p * (ell + 1) * n); },
        [&](long n) { return pp * n - 1 - (ell + m) / 2; });
    return acc * euler_phi(Rat(1), T).inverse();
}

/* jtheta(arg; q^base) * mult, with the theta computed far enough that the
 * product is still guaranteed to the ambient working order */
QSeries jt_sh(const Monomial& arg, const Rat& base, const Monomial& mult, const Rat& W) {
    Rat Wj = sgn(mult.e) < 0 ? Rat(W - mult.e) : W;
    return jtheta(arg, base, Wj).shifted(mult);
}

QSeries ap_sh(const Monomial& x, const Monomial& z, const Rat& rho, const Monomial& mult,
              const Rat& W) {
    Rat Wa = sgn(mult.e) < 0 ? Rat(W - mult.e) : W;
    return appell_m(x, z, rho, Wa).shifted(mult);
}

/* the B-block shared by the quasi-periodic relation and the polar-finite
 * decomposition:
 *   j(-q^{m(2p+j)+p(2r+1)};q^{2p(2p+j)})
 *     - q^{m(2p+j)-m(2r+1)} j(-q^{-m(2p+j)+p(2r+1)};q^{2p(2p+j)}) */
QSeries quasi_block(long p, long j, long mm, long r, const Rat& W) {
    Rat base(2 * p * (2 * p + j));
    Monomial a1(CycCoeff(-1), Rat(mm * (2 * p + j) + p * (2 * r + 1)));
    Monomial a2(CycCoeff(-1), Rat(-mm * (2 * p + j) + p * (2 * r + 1)));
    Monomial mult(CycCoeff(-1), Rat(mm * (2 * p + j) - mm * (2 * r + 1)));
    return jtheta(a1, base, W) + jt_sh(a2, base, mult, W);
}

} // namespace

Level make_level(long p, long pprime) {
    if (p < 1) fail_usage("level parameter p must be at least 1");
    if (pprime < 2) fail_usage("level parameter p' must be at least 2");
    if (std::gcd(p, pprime) != 1) fail_usage("level parameters p, p' must be coprime");
    if (pprime == 2 * p) fail_usage("level 0 admits no string functions");
    return Level{p, pprime};
}

Rat level_N(const Level& lv) { return make_rat(lv.pprime, lv.p) - 2; }

Rat snorm(const Level& lv, long m, long ell) {
    return make_rat((ell + 1) * (ell + 1) * lv.p, 4 * lv.pprime) - make_rat(1, 8) -
           make_rat(m * m * lv.p, 4 * (lv.pprime - 2 * lv.p));
}

int kappa_sign(long r) {
    long rm = ((r % 6) + 6) % 6;
    return (rm == 2 || rm == 3) ? -1 : 1;
}

QSeries char_weyl_kac(const Level& lv, long ell, const Monomial& z, const Rat& T) {
    if (ell < 0 || ell > lv.pprime - 2)
        fail_usage("spin must lie between 0 and p' - 2, got " + std::to_string(ell));
    if (z.c.is_zero()) fail_usage("character argument z must be invertible");
    long p = lv.p, pp = lv.pprime;
    Monomial pref = z.pow_rat(make_rat(-ell, 2));
    pref.e += make_rat(p * (ell + 1) * (ell + 1), 4 * pp) - make_rat(1, 8);
    return to_order(T, [&](const Rat& W) {
        QSeries jz = jtheta(z, Rat(1), W + 1);
        if (jz.is_zero())
            fail_eval("character denominator j(z;q) vanishes at z = " + z.str());
        Rat mj = *jz.min_exp();
        Rat Ws = sgn(mj) > 0 ? Rat(W + mj) : W;
        Monomial argA(-z.c.pow(-pp), Rat(p * (ell + 1) + p * pp) - z.e * pp);
        Monomial argB(-z.c.pow(-pp), Rat(-p * (ell + 1) + p * pp) - z.e * pp);
        Monomial zl = z.pow_int(ell + 1);
        QSeries num = jtheta(argA, Rat(2 * p * pp), Ws) -
                      jt_sh(argB, Rat(2 * p * pp), zl, Ws);
        if (!num.is_zero()) {
            Rat Tj = Ws - *num.min_exp() + mj * 2;
            if (Tj > jz.trunc()) jz = jtheta(z, Rat(1), Tj);
        }
        return (num * jz.inverse()).shifted(pref);
    });
}

QSeries string_C_normalized(const Level& lv, long m, long ell, const Rat& T) {
    validate_string_id(lv, m, ell);
    QSeries K = string_core(lv, m, ell, T);
    for (const Term& t : K.terms()) {
        if (!t.c.is_rational_value() || !rat_is_integer(t.c.rat_value()))
            fail_eval("string function fails integrality: coefficient " + t.c.str() +
                      " in the normalized series");
    }
    return K;
}

QSeries string_C(const Level& lv, long m, long ell, const Rat& T) {
    validate_string_id(lv, m, ell);
    Rat off = snorm(lv, m, ell);
    Rat TK = sgn(off) < 0 ? Rat(T - off) : T;
    return string_core(lv, m, ell, TK).shifted(Monomial::qpow(off));
}

QSeries quasi_period_rhs(long p, long j, long t, long s, long r, const Rat& T) {
    make_level(p, 2 * p + j);
    if (t < 0) fail_usage("quasi-period step count must be nonnegative");
    Rat e0 = make_rat(p * (2 * r + 1) * (2 * r + 1), 4 * (2 * p + j)) - make_rat(1, 8) +
             binom2(p) - Rat(p * (r - s)) - make_rat(p * s * s, j);
    return to_order(T, [&](const Rat& W) {
        QSeries acc = QSeries::zero(1, W, 1);
        for (long i = 1; i <= t; ++i) {
            Rat ei = Rat(-2 * p * j) * binom2(i) - Rat(2 * p * s * i);
            for (long mm = 1; mm <= p - 1; ++mm) {
                Rat em = binom2(mm + 1) + Rat(mm * (r - p));
                CycCoeff sg((mm & 1) ? -1 : 1);
                QSeries blk = quasi_block(p, j, mm, r, W + 1);
                Rat a1(mm * (j * i + s - j));
                Rat a2(-mm * (j * i + s));
                /* blk * (q^{a1} - q^{a2}), each piece recomputed no lower
                 * than the ambient order after its shift */
                for (int x = 0; x < 2; ++x) {
                    Monomial mult(x ? -sg : sg, e0 + ei + em + (x ? a2 : a1));
                    Rat Wb = sgn(mult.e) < 0 ? Rat(W - mult.e) : W;
                    QSeries piece = Wb > blk.trunc() ? quasi_block(p, j, mm, r, Wb) : blk;
                    acc = acc + piece.shifted(mult);
                }
            }
        }
        if (p % 2 == 0) acc = acc.neg();
        return acc;
    });
}

QSeries polar_finite_rhs(long p, long j, long r, const Monomial& z, const Rat& T) {
    Level lv = make_level(p, 2 * p + j);
    if (2 * r > lv.pprime - 2) fail_usage("spin must lie between 0 and p' - 2");
    if (z.c.is_zero()) fail_usage("polar-finite argument z must be invertible");
    Rat pre_e = make_rat(p * (2 * r + 1) * (2 * r + 1), 4 * (2 * p + j)) - make_rat(1, 8);
    return to_order(T, [&](const Rat& W) {
        QSeries acc = QSeries::zero(z.c.conductor(), W, 1);
        QSeries phi3inv = euler_phi(Rat(1), W).pow_int(-3);
        for (long s = 0; s <= j - 1; ++s) {
            Monomial jarg(-z.c.pow(j), z.e * j + Rat(p * (j - 2 * s)));
            Rat jbase(2 * p * j);
            /* string-function part: z^{-s} q^{ps^2/j} C_{2s,2r} j(-z^j q^{p(j-2s)};q^{2pj}) */
            Monomial m1(z.c.pow(-s), make_rat(p * s * s, j) - z.e * s);
            QSeries cs = string_C(lv, 2 * s, 2 * r, W);
            acc = acc + (cs * jt_sh(jarg, jbase, m1, W)).truncated(W);
            /* polar part */
            Monomial m2(z.c.pow(-s), pre_e + binom2(p) - Rat(p * (r - s)) - z.e * s);
            if (p & 1) m2.c = -m2.c;
            QSeries msum = QSeries::zero(z.c.conductor(), W, 1);
            for (long mm = 1; mm <= p - 1; ++mm) {
                Rat em = binom2(mm + 1) + Rat(mm * (r - p));
                CycCoeff sg((mm & 1) ? -1 : 1);
                QSeries blk = quasi_block(p, j, mm, r, W + 1);
                Monomial x1(CycCoeff(-1), Rat(j * mm - 2 * p * s));
                Monomial z1(-z.c.pow(-j), Rat(p * (j + 2 * s)) - z.e * j);
                Monomial x2(CycCoeff(-1), Rat(j * mm + 2 * p * s));
                Monomial z2(-z.c.pow(j), Rat(p * (j - 2 * s)) + z.e * j);
                QSeries apair = ap_sh(x1, z1, Rat(2 * j * p),
                                      Monomial(CycCoeff(1), Rat(mm * s - 2 * p * s)), W) +
                                ap_sh(x2, z2, Rat(2 * j * p),
                                      Monomial(CycCoeff(1), Rat(-mm * s)), W);
                msum = msum + (blk * apair).truncated(W).shifted(Monomial(sg, em));
            }
            acc = acc + (jt_sh(jarg, jbase, m2, W) * msum * phi3inv).truncated(W);
        }
        return acc;
    });
}

QSeries cross_spin_rhs(long p, long k, const Rat& T) {
    Level lv = make_level(p, 2 * p + 1);
    if (k < 0 || 2 * k > lv.pprime - 2) fail_usage("cross-spin index out of range");
    long ell1 = 2 * p - 1 - 2 * k;
    return to_order(T, [&](const Rat& W) {
        QSeries cn = string_C_normalized(lv, 1, ell1, W);
        Monomial lead(CycCoeff((p & 1) ? 1 : -1), Rat(-p * (k + 1)) + binom2(p + 1));
        QSeries acc = (euler_phi(Rat(1), W).pow_int(3) * cn).truncated(W).shifted(lead);
        Rat base(2 * p * (2 * p + 1));
        for (long mm = 1; mm <= p; ++mm) {
            CycCoeff sg((mm & 1) ? -1 : 1);
            Monomial argA(CycCoeff(-1), Rat(-mm * (2 * p + 1) + p * (2 * p + 2 * k + 2)));
            Monomial multA(-sg, Rat(-mm * (k + 1)) + binom2(mm + 1));
            acc = acc + jt_sh(argA, base, multA, W);
            Monomial argB(CycCoeff(-1), Rat(-mm * (2 * p + 1) + p * (2 * p - 2 * k)));
            Monomial multB(sg, Rat(mm * k) + binom2(mm + 1));
            acc = acc + jt_sh(argB, base, multB, W);
        }
        return acc;
    });
}

} // namespace qsf
