#include "coeff.hpp"

#include <cctype>

namespace qsf {

int unify_conductor(int a, int b) {
    if (a == b) return a;
    if (a == 1) return b;
    if (b == 1) return a;
    fail_usage("cannot mix coefficient rings Q(i) and Q(w)");
}

CycCoeff CycCoeff::gauss(const Rat& re, const Rat& im) { return CycCoeff(4, re, im); }
CycCoeff CycCoeff::eisenstein(const Rat& a, const Rat& b) { return CycCoeff(3, a, b); }

CycCoeff CycCoeff::zero(int cond) { return CycCoeff(cond, Rat(0), Rat(0)); }
CycCoeff CycCoeff::one(int cond) { return CycCoeff(cond, Rat(1), Rat(0)); }

Rat CycCoeff::rat_value() const {
    if (!is_rational_value()) fail_usage("coefficient " + str() + " is not rational");
    return a_;
}

CycCoeff CycCoeff::embedded(int cond) const {
    if (cond == cond_) return *this;
    if (cond != 1 && cond != 3 && cond != 4) fail_usage("unsupported conductor");
    if (!is_rational_value())
        fail_usage("cannot embed " + str() + " across Q(i)/Q(w)");
    return CycCoeff(cond, a_, Rat(0));
}

/* Bring x, y to a common conductor, widening rational-valued elements as needed. */
static void align(CycCoeff& x, CycCoeff& y) {
    int cx = x.conductor(), cy = y.conductor();
    if (cx == cy) return;
    if (cx == 1) { x = x.embedded(cy); return; }
    if (cy == 1) { y = y.embedded(cx); return; }
    /* 3 vs 4: allowed only when one side holds a rational value. */
    if (x.is_rational_value()) { x = x.embedded(cy); return; }
    if (y.is_rational_value()) { y = y.embedded(cx); return; }
    fail_usage("cannot mix coefficient values from Q(i) and Q(w)");
}

CycCoeff operator+(const CycCoeff& xin, const CycCoeff& yin) {
    CycCoeff x = xin, y = yin;
    align(x, y);
    return CycCoeff(x.cond_, x.a_ + y.a_, x.b_ + y.b_);
}

CycCoeff operator-(const CycCoeff& xin, const CycCoeff& yin) {
    CycCoeff x = xin, y = yin;
    align(x, y);
    return CycCoeff(x.cond_, x.a_ - y.a_, x.b_ - y.b_);
}

CycCoeff operator*(const CycCoeff& xin, const CycCoeff& yin) {
    CycCoeff x = xin, y = yin;
    align(x, y);
    switch (x.cond_) {
    case 1:
        return CycCoeff(1, x.a_ * y.a_, Rat(0));
    case 4:
        /* (a+bi)(c+di) = (ac-bd) + (ad+bc)i */
        return CycCoeff(4, x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    default:
        /* (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2,  w^2 = -1-w */
        return CycCoeff(3, x.a_ * y.a_ - x.b_ * y.b_,
                        x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_);
    }
}

CycCoeff operator/(const CycCoeff& x, const CycCoeff& y) { return x * y.inverse(); }

CycCoeff CycCoeff::operator-() const { return CycCoeff(cond_, -a_, -b_); }

CycCoeff CycCoeff::inverse() const {
    if (is_zero()) fail_eval("division by zero coefficient");
    switch (cond_) {
    case 1:
        return CycCoeff(1, Rat(1) / a_, Rat(0));
    case 4: {
        /* 1/(a+bi) = (a-bi)/(a^2+b^2) */
        Rat n = a_ * a_ + b_ * b_;
        return CycCoeff(4, a_ / n, -b_ / n);
    }
    default: {
        /* 1/(a+bw) = (a-b-bw)/(a^2-ab+b^2), since (a+bw)(a-b-bw) = a^2-ab+b^2 */
        Rat n = a_ * a_ - a_ * b_ + b_ * b_;
        return CycCoeff(3, (a_ - b_) / n, -b_ / n);
    }
    }
}

CycCoeff CycCoeff::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycCoeff acc = CycCoeff::one(cond_);
    CycCoeff base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1ul) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

static std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) ||
        !mpz_perfect_square_p(r.get_den_mpz_t()))
        return std::nullopt;
    Rat s;
    mpz_sqrt(mpq_numref(s.get_mpq_t()), r.get_num_mpz_t());
    mpz_sqrt(mpq_denref(s.get_mpq_t()), r.get_den_mpz_t());
    s.canonicalize();
    return s;
}

std::optional<CycCoeff> CycCoeff::sqrt() const {
    if (is_zero()) return CycCoeff::zero(cond_);
    if (is_rational_value()) {
        if (sgn(a_) > 0) {
            auto s = rat_sqrt(a_);
            if (!s) return std::nullopt;
            return CycCoeff(cond_, *s, Rat(0));
        }
        /* sqrt of a negative rational needs i, which Q(w) does not contain */
        if (cond_ == 3) return std::nullopt;
        auto s = rat_sqrt(-a_);
        if (!s) return std::nullopt;
        return CycCoeff::gauss(Rat(0), *s);
    }
    if (cond_ == 3) {
        /* b*w with b > 0: sqrt = sqrt(b)*(1+w), since (1+w)^2 = 1+2w+w^2 = w */
        if (sgn(a_) == 0 && sgn(b_) > 0) {
            auto s = rat_sqrt(b_);
            if (!s) return std::nullopt;
            return CycCoeff::eisenstein(*s, *s);
        }
        /* b*w^2 = -b-bw with b > 0: sqrt = sqrt(b)*w */
        if (a_ == b_ && sgn(a_) < 0) {
            auto s = rat_sqrt(-a_);
            if (!s) return std::nullopt;
            return CycCoeff::eisenstein(Rat(0), *s);
        }
    }
    return std::nullopt;
}

bool operator==(const CycCoeff& x, const CycCoeff& y) {
    if (x.cond_ != y.cond_)
        return x.is_rational_value() && y.is_rational_value() && x.a_ == y.a_;
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string CycCoeff::str() const {
    if (is_zero()) return "0";
    const char* unit = cond_ == 4 ? "i" : "w";
    std::string out;
    if (sgn(a_) != 0) out += a_.get_str();
    if (sgn(b_) != 0) {
        if (!out.empty() && sgn(b_) > 0) out += "+";
        out += b_.get_str() + "*" + unit;
    }
    return out;
}

/* Parse one signed rational starting at pos; advances pos past it. */
static Rat parse_signed_rat(const std::string& s, size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        pos++;
    }
    size_t digits = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) pos++;
    if (pos == digits) fail_parse("malformed coefficient string '" + s + "'", static_cast<long>(digits));
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.substr(digits, pos - digits).c_str(), 10) != 0)
        fail_parse("malformed rational in coefficient string '" + s + "'", static_cast<long>(digits));
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        fail_parse("zero denominator in coefficient string '" + s + "'", static_cast<long>(digits));
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

CycCoeff CycCoeff::parse(const std::string& text, int cond) {
    if (text == "0") return CycCoeff::zero(cond);
    size_t pos = 0;
    Rat first = parse_signed_rat(text, pos);
    if (pos == text.size()) return CycCoeff(first).embedded(cond);
    auto finish = [&](const Rat& re, const Rat& im) {
        if (pos + 2 != text.size() || text[pos] != '*')
            fail_parse("trailing junk in coefficient string '" + text + "'", static_cast<long>(pos));
        char u = text[pos + 1];
        int need = u == 'i' ? 4 : u == 'w' ? 3 : 0;
        if (need == 0) fail_parse("unknown unit in coefficient string '" + text + "'", static_cast<long>(pos + 1));
        if (need != cond) fail_usage("coefficient '" + text + "' does not belong to the declared ring");
        return cond == 4 ? CycCoeff::gauss(re, im) : CycCoeff::eisenstein(re, im);
    };
    if (text[pos] == '*') return finish(Rat(0), first);
    Rat second = parse_signed_rat(text, pos);
    return finish(first, second);
}

} // namespace qsf
