/* Series-level arithmetic: truncation bookkeeping, lattice upgrades, the
 * inverse and one-step-division recurrences, substitution, rendering and
 * serialization.  Golden values are tiny hand-checked expansions such as
 * $(1-q)^{-1} = 1 + q + q^2 + \dots$ and $(1-q)(1+q+q^2) = 1 - q^3 + O$.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qseries.hpp"

using namespace qsf;

/* integer-lattice polynomial with coefficients c[0], c[1], ... known to T */
static QSeries poly(std::vector<long> c, long T) {
    std::vector<Term> ts;
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) ts.push_back({static_cast<long>(k), CycCoeff(c[k])});
    return QSeries::from_terms(1, 1, T, std::move(ts));
}

static bool agree(const QSeries& a, const QSeries& b, long T) {
    return !QSeries::first_mismatch(a, b, Rat(T)).has_value();
}

TEST_CASE("products cancel correctly") {
    QSeries lhs = poly({1, -1}, 10) * poly({1, 1, 1}, 10);
    CHECK(agree(lhs, poly({1, 0, 0, -1}, 10), 10));
    CHECK(lhs.trunc() == Rat(10));
}

TEST_CASE("fractional exponents ride a common lattice") {
    QSeries a = QSeries::from_monomial(Monomial::qpow(make_rat(1, 8)), Rat(1));
    QSeries b = QSeries::from_monomial(Monomial::qpow(make_rat(3, 8)), Rat(1));
    QSeries p = a * b;
    CHECK(p.coeff_at(make_rat(1, 2)) == CycCoeff(1));
    CHECK(p.trunc() == make_rat(9, 8));
    CHECK(a.text() == "q^(1/8) + O(q^(9/8))");
}

TEST_CASE("sum collapsing to zero keeps its truncation") {
    QSeries s = poly({1, 1}, 20) + poly({-1, -1}, 20);
    CHECK(s.is_zero());
    CHECK(s.trunc() == Rat(20));
    CHECK(s.text() == "0 + O(q^21)");
}

TEST_CASE("geometric inverse") {
    QSeries inv = poly({1, -1}, 10).inverse();
    std::vector<long> ones(11, 1);
    CHECK(agree(inv, poly(ones, 10), 10));
}

TEST_CASE("inverse of a shifted unit tracks the window") {
    /* q^2 (1 - q) known to order 12: inverse is q^-2 (1 + q + ...) to order 8 */
    QSeries a = poly({1, -1}, 10).shifted(Monomial::qpow(Rat(2)));
    CHECK(a.trunc() == Rat(12));
    QSeries inv = a.inverse();
    CHECK(inv.trunc() == Rat(8));
    CHECK(inv.coeff_at(Rat(-2)) == CycCoeff(1));
    CHECK(inv.coeff_at(Rat(0)) == CycCoeff(1));
    CHECK(inv.coeff_at(Rat(8)) == CycCoeff(1));
    CHECK(agree(a * inv, QSeries::one(Rat(8), 1), 8));
}

TEST_CASE("inverse of zero fails") {
    CHECK_THROWS_AS(QSeries::zero(1, Rat(5)).inverse(), Error);
}

TEST_CASE("substitution") {
    QSeries s = poly({1, 1, 0, 1}, 4);
    QSeries t = s.substituted(CycCoeff(-1), Rat(2));
    CHECK(t.coeff_at(Rat(0)) == CycCoeff(1));
    CHECK(t.coeff_at(Rat(2)) == CycCoeff(-1));
    CHECK(t.coeff_at(Rat(6)) == CycCoeff(-1));
    CHECK(t.coeff_at(Rat(4)) == CycCoeff(0));
    CHECK(t.trunc() == Rat(8));

    QSeries u = poly({1, 1}, 6).substituted(CycCoeff::unit_omega(), Rat(1));
    CHECK(u.conductor() == 3);
    CHECK(u.coeff_at(Rat(1)) == CycCoeff::unit_omega());

    QSeries frac = QSeries::from_monomial(Monomial::qpow(make_rat(1, 2)), Rat(1));
    CHECK_THROWS_AS(frac.substituted(CycCoeff(-1), Rat(1)), Error);
    QSeries quarter = frac.substituted(CycCoeff(1), make_rat(1, 2));
    CHECK(quarter.coeff_at(make_rat(1, 4)) == CycCoeff(1));
    CHECK(quarter.trunc() == make_rat(1, 2));

    CHECK(agree(s.substituted(CycCoeff(1), Rat(1)), s, 4));
}

TEST_CASE("coefficients beyond the truncation are refused") {
    QSeries inv = poly({1, -1}, 10).inverse();
    CHECK(inv.coeff_at(Rat(3)) == CycCoeff(1));
    CHECK(inv.coeff_at(make_rat(7, 2)) == CycCoeff(0));
    CHECK_THROWS_AS(inv.coeff_at(Rat(11)), Error);
    CHECK_THROWS_AS(QSeries::first_mismatch(inv, inv, Rat(11)), Error);
}

TEST_CASE("first mismatch pinpoints the exponent") {
    auto mm = QSeries::first_mismatch(poly({1, 1}, 8), poly({1, 2}, 8), Rat(8));
    REQUIRE(mm.has_value());
    CHECK(mm->e == Rat(1));
    CHECK(mm->lhs == CycCoeff(1));
    CHECK(mm->rhs == CycCoeff(2));
    CHECK(!QSeries::first_mismatch(poly({1, 1}, 8), poly({1, 1}, 9), Rat(8)).has_value());
}

TEST_CASE("rescaling preserves the series") {
    QSeries s = poly({2, 0, -3}, 7);
    QSeries r = s.rescaled(30);
    CHECK(r.denom() == 30);
    CHECK(agree(s, r, 7));
    CHECK(r.trunc() == Rat(7));
}

TEST_CASE("one-step division matches the generic inverse") {
    QSeries g1 = QSeries::one(Rat(12), 1).div_one_minus(CycCoeff(1), Rat(1));
    QSeries g2 = QSeries::binomial(CycCoeff(1), Rat(1), Rat(12), 1).inverse();
    CHECK(agree(g1, g2, 12));
    CHECK(g1.coeff_at(Rat(12)) == CycCoeff(1));

    /* dividing by (1 - q^-1) = -q^-1 (1 - q) lowers then raises the window */
    QSeries h = QSeries::one(Rat(10), 1).div_one_minus(CycCoeff(1), Rat(-1));
    CHECK(h.coeff_at(Rat(0)) == CycCoeff(0));
    CHECK(h.coeff_at(Rat(1)) == CycCoeff(-1));
    CHECK(h.coeff_at(Rat(5)) == CycCoeff(-1));

    /* constant divisor */
    QSeries c = poly({1, 1}, 5).div_one_minus(CycCoeff(make_rat(1, 2)), Rat(0));
    CHECK(c.coeff_at(Rat(0)) == CycCoeff(2));
    CHECK_THROWS_AS(poly({1}, 5).div_one_minus(CycCoeff(1), Rat(0)), Error);

    QSeries undone = g1.times_binomial(CycCoeff(1), Rat(1));
    CHECK(agree(undone, QSeries::one(Rat(12), 1), 12));
}

TEST_CASE("integer powers") {
    QSeries b = poly({1, 1}, 10);
    CHECK(agree(b.pow_int(3), poly({1, 3, 3, 1}, 10), 10));
    CHECK(agree(b.pow_int(0), QSeries::one(Rat(10), 1), 10));
    QSeries inv2 = poly({1, -1}, 10).pow_int(-2);
    CHECK(inv2.coeff_at(Rat(4)) == CycCoeff(5));
}

TEST_CASE("algebra laws on random series") {
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> exp(1, 25), coeff(-9, 9), nterms(2, 10);
    auto rand_series = [&](int cond) {
        std::vector<Term> ts;
        ts.push_back({0, CycCoeff(1)});
        int n = static_cast<int>(nterms(rng));
        for (int k = 0; k < n; ++k) {
            long c = coeff(rng);
            if (c == 0) c = 1;
            CycCoeff cc = cond == 1 ? CycCoeff(c)
                          : cond == 4 ? CycCoeff::gauss(Rat(c), Rat(coeff(rng)))
                                      : CycCoeff::eisenstein(Rat(c), Rat(coeff(rng)));
            ts.push_back({exp(rng), cc});
        }
        return QSeries::from_terms(cond, 1, 25, std::move(ts));
    };
    for (int cond : {1, 4, 3}) {
        for (int rep = 0; rep < 30; ++rep) {
            QSeries a = rand_series(cond), b = rand_series(cond), c = rand_series(cond);
            CHECK(agree(a * b, b * a, 25));
            QSeries ab_c = (a * b) * c, a_bc = a * (b * c);
            CHECK(agree(ab_c, a_bc, 25));
            CHECK(agree(a * (b + c), a * b + a * c, 25));
            CHECK(agree(a * a.inverse(), QSeries::one(Rat(25), 1), 25));
        }
    }
}

TEST_CASE("rendering") {
    CHECK(poly({1, 1, -2, 3}, 3).text() == "1 + q - 2*q^2 + 3*q^3 + O(q^4)");
    CHECK(poly({0, -1}, 4).text() == "-q + O(q^5)");
    CHECK(poly({0, 0, 5}, 6).text() == "5*q^2 + O(q^7)");
    CHECK(QSeries::zero(1, Rat(5)).text() == "0 + O(q^6)");
    QSeries lau = poly({1, 1}, 4).shifted(Monomial::qpow(Rat(-1)));
    CHECK(lau.text() == "q^(-1) + 1 + O(q^4)");
    QSeries gi = QSeries::constant(CycCoeff::gauss(Rat(1), Rat(1)), Rat(2))
                 + QSeries::from_monomial(Monomial(CycCoeff(make_rat(1, 2)), Rat(1)), Rat(2));
    CHECK(gi.text() == "(1+1*i) + 1/2*q + O(q^3)");
}

TEST_CASE("json round trip") {
    QSeries s = poly({1, 1}, 5);
    std::string js = s.to_json();
    CHECK(js == R"({"denom":1,"trunc":5,"ring":"Q","terms":[[0,"1"],[1,"1"]]})");
    QSeries back = QSeries::from_json(js);
    CHECK(agree(s, back, 5));
    CHECK(back.to_json() == js);

    QSeries f = QSeries::from_monomial(Monomial(CycCoeff::unit_i(), make_rat(1, 8)), Rat(1));
    std::string jf = f.to_json();
    QSeries fb = QSeries::from_json(jf);
    CHECK(fb.to_json() == jf);
    CHECK(fb.conductor() == 4);
    CHECK(fb.coeff_at(make_rat(1, 8)) == CycCoeff::unit_i());

    CHECK_THROWS_AS(QSeries::from_json("{"), Error);
    CHECK_THROWS_AS(QSeries::from_json(R"({"denom":1})"), Error);
    CHECK_THROWS_AS(QSeries::from_json(R"({"denom":0,"trunc":1,"ring":"Q","terms":[]})"), Error);
    CHECK_THROWS_AS(QSeries::from_json(R"({"denom":1,"trunc":1,"ring":"X","terms":[]})"), Error);
}

TEST_CASE("truncation narrowing") {
    QSeries s = poly({1, 2, 3, 4}, 9);
    QSeries t = s.truncated(Rat(2));
    CHECK(t.trunc() == Rat(2));
    CHECK(t.terms().size() == 3);
    CHECK(s.truncated(Rat(50)).trunc() == Rat(9));
    QSeries half = QSeries::from_monomial(Monomial::qpow(make_rat(1, 2)), Rat(3)).truncated(make_rat(3, 4));
    CHECK(half.trunc() == make_rat(3, 4));
    CHECK(half.coeff_at(make_rat(1, 2)) == CycCoeff(1));
}

TEST_CASE("empty-operand products stay pessimistic") {
    QSeries z = QSeries::zero(1, Rat(5), 1);
    QSeries p = z * poly({1, 1}, 20);
    CHECK(p.is_zero());
    /* the hidden tail of z starts no lower than q^6, so the product is known to 5 */
    CHECK(p.trunc() == Rat(5));
}
