/* Truncated q-series arithmetic over cyclotomic coefficients.
 *
 * Multiplication accumulates term products densely over the stride lattice of
 * the two operands: with minimum exponents $m_a, m_b$ every product exponent
 * lies in $m_a + m_b + g\,\mathbb{Z}_{\ge 0}$ where g is the gcd of all term
 * offsets, so a flat array of length (window/g + 1) collects the result,
 * falling back to a hash map when that array would be unreasonably large.
 *
 * Division is the linear recurrence obtained from $a \cdot y = 1$ read off
 * coefficient by coefficient; dividing by the special shape $(1 - c\,q^k)$
 * uses the one-step recurrence $y_e = a_e + c\,y_{e-k}$, which is what makes
 * the nested Pochhammer quotients in the Eulerian series cheap.
 */

#include "qseries.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace qsf {

namespace {

constexpr long kDenseCap = 2'000'000;

long add_exp(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) fail_eval("exponent numerator overflow");
    return r;
}

long mul_exp(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) fail_eval("exponent numerator overflow");
    return r;
}

/* lcm of a starting lattice denominator and the denominators of some exponents */
long lattice_denom(long denom, std::initializer_list<const Rat*> exps) {
    long d = denom;
    for (const Rat* e : exps) d = lcm_long(d, int_to_long(e->get_den(), "exponent lattice"));
    return d;
}

struct Aligned {
    QSeries a, b;
};

Aligned align2(const QSeries& a, const QSeries& b) {
    int nc = unify_conductor(a.conductor(), b.conductor());
    long d = lcm_long(a.denom(), b.denom());
    return {a.embedded(nc).rescaled(d), b.embedded(nc).rescaled(d)};
}

} // namespace

long QSeries::exp_num(const Rat& e) const {
    Rat s = e * denom_;
    if (!rat_is_integer(s))
        fail_eval("exponent " + rat_str(e) + " is off the 1/" + std::to_string(denom_) + " lattice");
    return int_to_long(s.get_num(), "exponent numerator");
}

QSeries QSeries::zero(int cond, const Rat& trunc, long denom) {
    QSeries s;
    s.cond_ = cond;
    s.denom_ = lattice_denom(denom, {&trunc});
    s.trunc_num_ = s.exp_num(trunc);
    return s;
}

QSeries QSeries::constant(const CycCoeff& c, const Rat& trunc, long denom) {
    QSeries s = zero(c.conductor(), trunc, denom);
    if (!c.is_zero() && s.trunc_num_ >= 0) s.terms_.push_back({0, c});
    return s;
}

QSeries QSeries::one(const Rat& trunc, long denom) {
    return constant(CycCoeff(1), trunc, denom);
}

QSeries QSeries::from_monomial(const Monomial& m, const Rat& trunc, long denom) {
    QSeries s;
    s.cond_ = m.c.conductor();
    s.denom_ = lattice_denom(denom, {&trunc, &m.e});
    s.trunc_num_ = s.exp_num(trunc);
    if (!m.c.is_zero()) {
        long e = s.exp_num(m.e);
        if (e <= s.trunc_num_) s.terms_.push_back({e, m.c});
    }
    return s;
}

QSeries QSeries::binomial(const CycCoeff& c, const Rat& k, const Rat& trunc, long denom) {
    QSeries s;
    s.cond_ = c.conductor();
    s.denom_ = lattice_denom(denom, {&trunc, &k});
    s.trunc_num_ = s.exp_num(trunc);
    std::vector<Term> t;
    t.push_back({0, CycCoeff::one(s.cond_)});
    if (!c.is_zero()) t.push_back({s.exp_num(k), -c});
    return from_terms(s.cond_, s.denom_, s.trunc_num_, std::move(t));
}

QSeries QSeries::from_terms(int cond, long denom, long trunc_num, std::vector<Term> terms) {
    if (denom <= 0) fail_usage("series lattice denominator must be positive");
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (t.e > trunc_num) continue;
        CycCoeff c = t.c.embedded(cond);
        if (c.is_zero()) continue;
        if (!out.empty() && out.back().e == t.e) {
            out.back().c = out.back().c + c;
            if (out.back().c.is_zero()) out.pop_back();
        } else {
            out.push_back({t.e, std::move(c)});
        }
    }
    QSeries s;
    s.cond_ = cond;
    s.denom_ = denom;
    s.trunc_num_ = trunc_num;
    s.terms_ = std::move(out);
    return s;
}

std::optional<Rat> QSeries::min_exp() const {
    if (terms_.empty()) return std::nullopt;
    return make_rat(terms_.front().e, denom_);
}

QSeries QSeries::embedded(int cond) const {
    if (cond == cond_) return *this;
    QSeries s;
    s.cond_ = cond;
    s.denom_ = denom_;
    s.trunc_num_ = trunc_num_;
    s.terms_.reserve(terms_.size());
    for (const auto& t : terms_) s.terms_.push_back({t.e, t.c.embedded(cond)});
    return s;
}

QSeries QSeries::rescaled(long new_denom) const {
    if (new_denom == denom_) return *this;
    if (new_denom <= 0 || new_denom % denom_ != 0)
        fail_eval("lattice rescale target " + std::to_string(new_denom) +
                  " is not a multiple of " + std::to_string(denom_));
    long f = new_denom / denom_;
    QSeries s;
    s.cond_ = cond_;
    s.denom_ = new_denom;
    s.trunc_num_ = mul_exp(trunc_num_, f);
    s.terms_.reserve(terms_.size());
    for (const auto& t : terms_) s.terms_.push_back({mul_exp(t.e, f), t.c});
    return s;
}

QSeries QSeries::truncated(const Rat& T) const {
    long tn = int_to_long(rat_floor(T * denom_), "truncation");
    if (tn >= trunc_num_) return *this;
    QSeries s = *this;
    s.trunc_num_ = tn;
    while (!s.terms_.empty() && s.terms_.back().e > tn) s.terms_.pop_back();
    return s;
}

QSeries QSeries::neg() const {
    QSeries s = *this;
    for (auto& t : s.terms_) t.c = -t.c;
    return s;
}

QSeries QSeries::scaled(const CycCoeff& c) const {
    int nc = unify_conductor(cond_, c.conductor());
    QSeries s;
    s.cond_ = nc;
    s.denom_ = denom_;
    s.trunc_num_ = trunc_num_;
    if (!c.is_zero()) {
        CycCoeff cc = c.embedded(nc);
        s.terms_.reserve(terms_.size());
        for (const auto& t : terms_) s.terms_.push_back({t.e, (t.c * cc).embedded(nc)});
    }
    return s;
}

QSeries QSeries::shifted(const Monomial& m) const {
    long d = lattice_denom(denom_, {&m.e});
    QSeries s = rescaled(d).scaled(m.c);
    long offset = s.exp_num(m.e);
    QSeries out;
    out.cond_ = s.cond_;
    out.denom_ = d;
    out.trunc_num_ = add_exp(s.trunc_num_, offset);
    out.terms_.reserve(s.terms_.size());
    for (const auto& t : s.terms_) out.terms_.push_back({add_exp(t.e, offset), t.c});
    return out;
}

QSeries QSeries::inverse() const {
    if (terms_.empty())
        fail_eval("inverse of a series with no nonzero term below its truncation");
    long m = terms_.front().e;
    long L = trunc_num_ - m; /* known window length in lattice steps, >= 0 */
    long g = 0;
    for (const auto& t : terms_) g = std::gcd(g, t.e - m);
    if (g == 0) g = 1;
    long n = L / g + 1;
    if (n > kDenseCap) fail_eval("inverse: truncation window too dense");
    CycCoeff z = CycCoeff::zero(cond_);
    std::vector<CycCoeff> A(static_cast<size_t>(n), z), Y(static_cast<size_t>(n), z);
    std::vector<long> supp;
    for (const auto& t : terms_) {
        long d = (t.e - m) / g;
        A[static_cast<size_t>(d)] = t.c;
        if (d > 0 && d < n) supp.push_back(d);
    }
    CycCoeff lead_inv = A[0].inverse();
    Y[0] = lead_inv;
    for (long t = 1; t < n; ++t) {
        CycCoeff acc = z;
        for (long d : supp) {
            if (d > t) break;
            if (Y[static_cast<size_t>(t - d)].is_zero()) continue;
            acc = acc + A[static_cast<size_t>(d)] * Y[static_cast<size_t>(t - d)];
        }
        if (!acc.is_zero()) Y[static_cast<size_t>(t)] = -(lead_inv * acc);
    }
    std::vector<Term> out;
    for (long t = 0; t < n; ++t) {
        if (Y[static_cast<size_t>(t)].is_zero()) continue;
        out.push_back({-m + g * t, std::move(Y[static_cast<size_t>(t)])});
    }
    /* y is trustworthy only where every contribution a_{d} y_{t-d} was known */
    return from_terms(cond_, denom_, trunc_num_ - 2 * m, std::move(out));
}

QSeries QSeries::pow_int(long k) const {
    if (k == 0) return QSeries::one(trunc(), denom_).embedded(cond_);
    if (k < 0) return inverse().pow_int(-k);
    QSeries base = *this;
    QSeries acc;
    bool have = false;
    while (k > 0) {
        if (k & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

QSeries QSeries::substituted(const CycCoeff& c, const Rat& M) const {
    if (sgn(M) <= 0) fail_usage("substitution exponent must be positive, got " + rat_str(M));
    if (c.is_zero()) fail_usage("substitution base must be nonzero");
    long Mn = int_to_long(M.get_num(), "substitution exponent");
    long Md = int_to_long(M.get_den(), "substitution exponent");
    bool unit = c.is_one();
    int nc = unit ? cond_ : unify_conductor(cond_, c.conductor());
    long d2 = mul_exp(denom_, Md);
    if (d2 > (1L << 46)) fail_eval("exponent denominator overflow in substitution");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        CycCoeff cc = t.c.embedded(nc);
        if (!unit) {
            if (t.e % denom_ != 0)
                fail_eval("substitution with base " + c.str() + " needs integral exponents, found q^" +
                          rat_str(make_rat(t.e, denom_)));
            cc = (cc * c.pow(t.e / denom_)).embedded(nc);
        }
        ts.push_back({mul_exp(t.e, Mn), std::move(cc)});
    }
    long T2 = mul_exp(trunc_num_, Mn);
    long g = d2;
    for (const auto& t : ts) g = std::gcd(g, t.e);
    g = std::gcd(g, T2);
    if (g == 0) g = d2;
    for (auto& t : ts) t.e /= g;
    return from_terms(nc, d2 / g, T2 / g, std::move(ts));
}

QSeries QSeries::div_one_minus(const CycCoeff& c, const Rat& k) const {
    if (c.is_zero()) return *this;
    if (sgn(k) == 0) {
        CycCoeff d = CycCoeff::one(c.conductor()) - c;
        if (d.is_zero()) fail_eval("division by (1 - 1)");
        return scaled(d.inverse());
    }
    if (sgn(k) < 0) {
        /* 1/(1 - c q^k) = -c^{-1} q^{-k} / (1 - c^{-1} q^{-k}) */
        CycCoeff ci = c.inverse();
        return shifted(Monomial(-ci, -k)).div_one_minus(ci, -k);
    }
    if (terms_.empty()) return *this;
    long d = lattice_denom(denom_, {&k});
    QSeries s = rescaled(d);
    long kn = s.exp_num(k);
    int nc = unify_conductor(s.cond_, c.conductor());
    long m = s.terms_.front().e;
    long L = s.trunc_num_ - m;
    long g = kn;
    for (const auto& t : s.terms_) g = std::gcd(g, t.e - m);
    long n = L / g + 1;
    if (n > kDenseCap) fail_eval("division: truncation window too dense");
    CycCoeff z = CycCoeff::zero(nc);
    std::vector<CycCoeff> Y(static_cast<size_t>(n), z);
    for (const auto& t : s.terms_) Y[static_cast<size_t>((t.e - m) / g)] = t.c.embedded(nc);
    long step = kn / g;
    CycCoeff cc = c.embedded(nc);
    for (long t = step; t < n; ++t) {
        if (Y[static_cast<size_t>(t - step)].is_zero()) continue;
        Y[static_cast<size_t>(t)] = (Y[static_cast<size_t>(t)] + cc * Y[static_cast<size_t>(t - step)]).embedded(nc);
    }
    std::vector<Term> out;
    for (long t = 0; t < n; ++t) {
        if (Y[static_cast<size_t>(t)].is_zero()) continue;
        out.push_back({m + g * t, std::move(Y[static_cast<size_t>(t)])});
    }
    return from_terms(nc, d, s.trunc_num_, std::move(out));
}

QSeries QSeries::times_binomial(const CycCoeff& c, const Rat& k) const {
    if (c.is_zero()) return *this;
    return *this - shifted(Monomial(c, k));
}

CycCoeff QSeries::coeff_at(const Rat& e) const {
    Rat s = e * denom_;
    if (!rat_is_integer(s)) {
        if (e <= trunc()) return CycCoeff::zero(cond_);
        fail_eval("coefficient of q^" + rat_str(e) + " lies beyond the truncation order " + rat_str(trunc()));
    }
    long en = int_to_long(s.get_num(), "coefficient exponent");
    if (en > trunc_num_)
        fail_eval("coefficient of q^" + rat_str(e) + " lies beyond the truncation order " + rat_str(trunc()));
    auto it = std::lower_bound(terms_.begin(), terms_.end(), en,
                               [](const Term& t, long v) { return t.e < v; });
    if (it != terms_.end() && it->e == en) return it->c;
    return CycCoeff::zero(cond_);
}

std::optional<Mismatch> QSeries::first_mismatch(const QSeries& a, const QSeries& b, const Rat& T) {
    if (a.trunc() < T)
        fail_eval("comparison to order " + rat_str(T) + " exceeds lhs truncation " + rat_str(a.trunc()));
    if (b.trunc() < T)
        fail_eval("comparison to order " + rat_str(T) + " exceeds rhs truncation " + rat_str(b.trunc()));
    auto [A, B] = align2(a, b);
    long Tn = int_to_long(rat_floor(T * A.denom_), "comparison order");
    size_t i = 0, j = 0;
    const auto& ta = A.terms_;
    const auto& tb = B.terms_;
    CycCoeff z = CycCoeff::zero(A.cond_);
    while (i < ta.size() || j < tb.size()) {
        long ea = i < ta.size() ? ta[i].e : Tn + 1;
        long eb = j < tb.size() ? tb[j].e : Tn + 1;
        long e = std::min(ea, eb);
        if (e > Tn) break;
        const CycCoeff& ca = (ea == e) ? ta[i].c : z;
        const CycCoeff& cb = (eb == e) ? tb[j].c : z;
        if (!(ca == cb)) return Mismatch{make_rat(e, A.denom_), ca, cb};
        if (ea == e) ++i;
        if (eb == e) ++j;
    }
    return std::nullopt;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    auto [A, B] = align2(a, b);
    long Tn = std::min(A.trunc_num_, B.trunc_num_);
    std::vector<Term> out;
    out.reserve(A.terms_.size() + B.terms_.size());
    size_t i = 0, j = 0;
    while (i < A.terms_.size() || j < B.terms_.size()) {
        bool ta = i < A.terms_.size(), tb = j < B.terms_.size();
        long ea = ta ? A.terms_[i].e : 0, eb = tb ? B.terms_[j].e : 0;
        if (ta && (!tb || ea < eb)) {
            out.push_back(A.terms_[i++]);
        } else if (tb && (!ta || eb < ea)) {
            out.push_back(B.terms_[j++]);
        } else {
            CycCoeff c = A.terms_[i].c + B.terms_[j].c;
            if (!c.is_zero()) out.push_back({ea, std::move(c)});
            ++i;
            ++j;
        }
    }
    return QSeries::from_terms(A.cond_, A.denom_, Tn, std::move(out));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.neg(); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    auto [A, B] = align2(a, b);
    long Ta = A.trunc_num_, Tb = B.trunc_num_;
    /* an operand with no known term still might start anywhere above its truncation */
    long ma = A.terms_.empty() ? Ta + 1 : A.terms_.front().e;
    long mb = B.terms_.empty() ? Tb + 1 : B.terms_.front().e;
    long Tres = std::min(add_exp(Ta, mb), add_exp(Tb, ma));
    if (A.terms_.empty() || B.terms_.empty())
        return QSeries::from_terms(A.cond_, A.denom_, Tres, {});
    long base = add_exp(ma, mb);
    if (Tres < base) return QSeries::from_terms(A.cond_, A.denom_, Tres, {});
    long g = 0;
    for (const auto& t : A.terms_) g = std::gcd(g, t.e - ma);
    for (const auto& t : B.terms_) g = std::gcd(g, t.e - mb);
    if (g == 0) g = 1;
    long L = Tres - base;
    long n = L / g + 1;
    std::vector<Term> out;
    if (n <= kDenseCap) {
        CycCoeff z = CycCoeff::zero(A.cond_);
        std::vector<CycCoeff> acc(static_cast<size_t>(n), z);
        for (const auto& ta : A.terms_) {
            if (ta.e + mb > Tres) break;
            for (const auto& tb : B.terms_) {
                long e = ta.e + tb.e;
                if (e > Tres) break;
                size_t idx = static_cast<size_t>((e - base) / g);
                acc[idx] = (acc[idx] + ta.c * tb.c).embedded(A.cond_);
            }
        }
        for (long t = 0; t < n; ++t) {
            if (acc[static_cast<size_t>(t)].is_zero()) continue;
            out.push_back({base + g * t, std::move(acc[static_cast<size_t>(t)])});
        }
    } else {
        std::map<long, CycCoeff> acc;
        for (const auto& ta : A.terms_) {
            if (ta.e + mb > Tres) break;
            for (const auto& tb : B.terms_) {
                long e = ta.e + tb.e;
                if (e > Tres) break;
                auto [it, fresh] = acc.emplace(e, ta.c * tb.c);
                if (!fresh) it->second = it->second + ta.c * tb.c;
            }
        }
        for (auto& [e, c] : acc) {
            if (c.is_zero()) continue;
            out.push_back({e, std::move(c)});
        }
    }
    return QSeries::from_terms(A.cond_, A.denom_, Tres, std::move(out));
}

namespace {

/* "q", "q^3", "q^(-2)", "q^(5/8)"; exponent 0 yields an empty power string */
std::string power_str(long e, long denom) {
    Rat ex = make_rat(e, denom);
    if (sgn(ex) == 0) return "";
    if (ex == 1) return "q";
    if (rat_is_integer(ex) && sgn(ex) > 0) return "q^" + rat_str(ex);
    return "q^(" + rat_str(ex) + ")";
}

} // namespace

std::string QSeries::text() const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& t : terms_) {
            std::string pw = power_str(t.e, denom_);
            std::string body;
            bool negative = false;
            if (t.c.is_rational_value()) {
                Rat r = t.c.rat_value();
                negative = sgn(r) < 0;
                Rat mag = negative ? Rat(-r) : r;
                if (pw.empty()) {
                    body = rat_str(mag);
                } else if (mag == 1) {
                    body = pw;
                } else {
                    body = rat_str(mag) + "*" + pw;
                }
            } else {
                body = "(" + t.c.str() + ")";
                if (!pw.empty()) body += "*" + pw;
            }
            if (first) {
                os << (negative ? "-" : "") << body;
                first = false;
            } else {
                os << (negative ? " - " : " + ") << body;
            }
        }
    }
    /* order symbol on the coarsest lattice the printed terms live on */
    long g = denom_;
    for (const auto& t : terms_) g = std::gcd(g, t.e);
    if (g == 0) g = denom_;
    long onum = (trunc_num_ >= 0 ? trunc_num_ / g : (trunc_num_ - g + 1) / g) + 1;
    std::string opow = power_str(onum * g, denom_);
    os << " + O(" << (opow.empty() ? "1" : opow) << ")";
    return os.str();
}

std::string QSeries::to_json() const {
    long g = denom_;
    for (const auto& t : terms_) g = std::gcd(g, t.e);
    if (g == 0) g = denom_;
    nlohmann::ordered_json j;
    j["denom"] = denom_ / g;
    long tn = trunc_num_ >= 0 ? trunc_num_ / g : -((-trunc_num_ + g - 1) / g);
    j["trunc"] = tn;
    j["ring"] = cond_ == 4 ? "Qi" : cond_ == 3 ? "Qw" : "Q";
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : terms_) {
        terms.push_back(nlohmann::ordered_json::array({t.e / g, t.c.str()}));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

QSeries QSeries::from_json(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        fail_parse(std::string("series JSON: ") + e.what(), static_cast<long>(e.byte) - 1);
    }
    if (!j.is_object() || !j.contains("denom") || !j.contains("trunc") || !j.contains("ring") ||
        !j.contains("terms"))
        fail_usage("series JSON needs the keys denom, trunc, ring, terms");
    long denom = j["denom"].get<long>();
    long tn = j["trunc"].get<long>();
    std::string ring = j["ring"].get<std::string>();
    int cond = ring == "Q" ? 1 : ring == "Qi" ? 4 : ring == "Qw" ? 3 : 0;
    if (cond == 0) fail_usage("series JSON ring must be Q, Qi or Qw, got '" + ring + "'");
    if (denom <= 0) fail_usage("series JSON denom must be positive");
    std::vector<Term> terms;
    for (const auto& item : j["terms"]) {
        if (!item.is_array() || item.size() != 2)
            fail_usage("series JSON terms must be [exponent, coefficient] pairs");
        terms.push_back({item[0].get<long>(), CycCoeff::parse(item[1].get<std::string>(), cond)});
    }
    return from_terms(cond, denom, tn, std::move(terms));
}

} // namespace qsf
