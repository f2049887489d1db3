/* Appell function evaluation: frozen low-order digits of the tenth-order
 * combinations, the three transformation laws
 *   $m(x,z;q) = m(x,qz;q)$,
 *   $m(x,z;q) = x^{-1} m(x^{-1},z^{-1};q)$,
 *   $m(qx,z;q) = 1 - x\,m(x,z;q)$
 * on random generic monomial pairs, pole detection at non-generic parameters,
 * truncation independence, and the bilateral partial-fraction sum against its
 * theta-quotient product form.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "appell.hpp"
#include "theta.hpp"

using namespace qsf;

static bool agree(const QSeries& a, const QSeries& b, long T) {
    return !QSeries::first_mismatch(a, b, Rat(T)).has_value();
}

static Monomial qpow(long n) { return Monomial::qpow(Rat(n)); }

/* both the pole condition and the vanishing of j(z;q^rho) are invariant
 * under the three transformation laws, so checking the base pair suffices */
static bool generic_pair(const Monomial& x, const Monomial& z, const Rat& rho) {
    if ((x.c * z.c).is_one() && rat_is_integer(Rat((x.e + z.e) / rho))) return false;
    if (z.c.is_one() && rat_is_integer(Rat(z.e / rho))) return false;
    return true;
}

TEST_CASE("tenth order combinations, frozen digits") {
    /* -q^{-1}(m(q,q;q^10) + m(q,q^2;q^10)) = 1 + 2q + 2q^2 + 3q^3 + ... */
    QSeries phi = (appell_m(qpow(1), qpow(1), Rat(10), Rat(41)) +
                   appell_m(qpow(1), qpow(2), Rat(10), Rat(41)))
                      .shifted(Monomial(CycCoeff(-1), Rat(-1)));
    CHECK(phi.coeff_at(Rat(0)) == CycCoeff(1));
    CHECK(phi.coeff_at(Rat(1)) == CycCoeff(2));
    CHECK(phi.coeff_at(Rat(2)) == CycCoeff(2));
    CHECK(phi.coeff_at(Rat(3)) == CycCoeff(3));

    /* -(m(q^3,q;q^10) + m(q^3,q^3;q^10)) = q + q^2 + 2q^3 + ... */
    QSeries psi = (appell_m(qpow(3), qpow(1), Rat(10), Rat(40)) +
                   appell_m(qpow(3), qpow(3), Rat(10), Rat(40)))
                      .scaled(CycCoeff(-1));
    CHECK(psi.coeff_at(Rat(0)) == CycCoeff(0));
    CHECK(psi.coeff_at(Rat(1)) == CycCoeff(1));
    CHECK(psi.coeff_at(Rat(2)) == CycCoeff(1));
    CHECK(psi.coeff_at(Rat(3)) == CycCoeff(2));
}

TEST_CASE("transformation laws on random generic pairs") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2), pick(0, 5), rho_pick(1, 3);
    const CycCoeff pool[6] = {CycCoeff(1),  CycCoeff(-1),           CycCoeff(2),
                              CycCoeff(-2), CycCoeff(make_rat(1, 2)), CycCoeff::unit_i()};
    long T = 80;
    int done = 0;
    while (done < 20) {
        Monomial x(pool[pick(rng)], make_rat(num(rng), den(rng)));
        Monomial z(pool[pick(rng)], make_rat(num(rng), den(rng)));
        Rat rho(rho_pick(rng));
        if (!generic_pair(x, z, rho)) continue;

        QSeries base = appell_m(x, z, rho, Rat(T));

        QSeries zshift = appell_m(x, Monomial(z.c, z.e + rho), rho, Rat(T));
        CHECK(agree(base, zshift, T));

        Rat Tflip = x.e > 0 ? Rat(Rat(T) + x.e) : Rat(T);
        QSeries flip = appell_m(x.inverse(), z.inverse(), rho, Tflip).shifted(x.inverse());
        CHECK(agree(base, flip, T));

        QSeries xshift = appell_m(Monomial(x.c, x.e + rho), z, rho, Rat(T));
        Rat Tc = x.e < 0 ? Rat(Rat(T) - x.e) : Rat(T);
        QSeries rhs = QSeries::one(Rat(T), 1) - appell_m(x, z, rho, Tc).shifted(x);
        CHECK(agree(xshift, rhs, T));
        ++done;
    }
}

TEST_CASE("non-generic parameters raise an evaluation error") {
    try {
        appell_m(qpow(1), qpow(9), Rat(10), Rat(20));
        FAIL("expected a pole error");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::Eval);
        CHECK(std::string(err.what()).find("r = 0") != std::string::npos);
    }
    /* z on the base lattice makes the theta prefactor vanish */
    CHECK_THROWS_AS(appell_m(qpow(3), qpow(10), Rat(10), Rat(20)), Error);
}

TEST_CASE("truncation independence") {
    QSeries lo = appell_m(qpow(1), qpow(3), Rat(5), Rat(40));
    QSeries hi = appell_m(qpow(1), qpow(3), Rat(5), Rat(80));
    CHECK(agree(lo, hi, 40));
    QSeries neg = appell_m(Monomial(CycCoeff(-1), Rat(2)), Monomial(CycCoeff(2), Rat(-1)), Rat(5),
                           Rat(40));
    QSeries neg2 = appell_m(Monomial(CycCoeff(-1), Rat(2)), Monomial(CycCoeff(2), Rat(-1)), Rat(5),
                            Rat(90));
    CHECK(agree(neg, neg2, 40));
}

TEST_CASE("bilateral partial fraction sum equals its theta quotient") {
    long T = 200;
    QSeries lhs = bilateral_pf_sum(Rat(8), Rat(20), Rat(T));
    QSeries rhs = euler_phi(Rat(20), Rat(T)).pow_int(3) *
                  jtheta(Monomial(CycCoeff(-1), Rat(8)), Rat(20), Rat(T)).inverse();
    CHECK(agree(lhs, rhs, T));

    /* flipping e -> rho - e fixes the theta quotient, so it fixes the sum */
    CHECK(agree(bilateral_pf_sum(Rat(6), Rat(20), Rat(100)),
                bilateral_pf_sum(Rat(14), Rat(20), Rat(100)), 100));

    /* a summand with exponent zero contributes the constant 1/2 */
    QSeries mid = bilateral_pf_sum(Rat(0), Rat(4), Rat(50));
    QSeries prod = euler_phi(Rat(4), Rat(50)).pow_int(3) *
                   jtheta(Monomial(CycCoeff(-1), Rat(0)), Rat(4), Rat(50)).inverse();
    CHECK(agree(mid, prod, 50));
}
