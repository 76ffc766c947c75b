#include "tl/scalar.hpp"

#include <sstream>

namespace tl {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_[{0, 0}] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int q_exp, int s_exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[{q_exp, s_exp}] = std::move(coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
           terms_.begin()->second == 1;
}

void LaurentPoly::insert_term(const ExpPair& e, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, std::move(c));
    if (!inserted) {
        it->second += c;  // unreachable in current callers
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r += b;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r -= b;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExpPair e{ea.q + eb.q, ea.s + eb.s};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
}

LaurentPoly LaurentPoly::shifted(int dq, int ds) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.q + dq, e.s + ds}] = c;
    return r;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

ExpPair LaurentPoly::min_exp() const {
    ExpPair m{terms_.begin()->first.q, terms_.begin()->first.s};
    for (const auto& [e, c] : terms_) {
        if (e.q < m.q) m.q = e.q;
        if (e.s < m.s) m.s = e.s;
    }
    return m;
}

const std::pair<const ExpPair, Int>& LaurentPoly::lex_min_term() const {
    return *terms_.begin();
}

LaurentPoly LaurentPoly::divided_by_content(const Int& d) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c / d;
    return r;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPoly();
    // Shift both operands into the ordinary polynomial ring; the quotient of
    // two min-exponent-0 polynomials again has nonnegative exponents.
    ExpPair am = a.min_exp(), bm = b.min_exp();
    LaurentPoly r = a.shifted(-am.q, -am.s);
    LaurentPoly b0 = b.shifted(-bm.q, -bm.s);
    const auto& ltb = *b0.terms().rbegin();
    LaurentPoly quot;
    while (!r.is_zero()) {
        const auto& ltr = *r.terms().rbegin();
        int dq = ltr.first.q - ltb.first.q;
        int ds = ltr.first.s - ltb.first.s;
        if (dq < 0 || ds < 0) return std::nullopt;
        if (ltr.second % ltb.second != 0) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(ltr.second / ltb.second, dq, ds);
        quot += t;
        r -= t * b0;
    }
    return quot.shifted(am.q - bm.q, am.s - bm.s);
}

LaurentPoly qint(int n) {
    if (n < 0) throw std::domain_error("qint: [n] is undefined for negative n");
    LaurentPoly p;
    for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(1, n - 1 - 2 * k, 0);
    return p;
}

LaurentPoly qint_b(int n) {
    if (n < 0) throw std::domain_error("qint_b: [n]_s is undefined for negative n");
    if (n == 0) return LaurentPoly(Int(1));
    return LaurentPoly::monomial(1, n - 1, 1) + LaurentPoly::monomial(1, 1 - n, -1);
}

// ---- serialization ----

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        arr.push_back({c.str(), e.q, e.s});
    }
    return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly json: expected array");
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("poly json: expected [c, eq, es] triple");
        Int c(t[0].get<std::string>());
        p.insert_term({t[1].get<int>(), t[2].get<int>()}, std::move(c));
    }
    return p;
}

namespace {

std::string term_to_string(const ExpPair& e, const Int& mag, bool latex) {
    std::ostringstream os;
    bool have = false;
    if (mag != 1 || (e.q == 0 && e.s == 0)) {
        os << mag.str();
        have = true;
    }
    auto var = [&](const char* name, int exp) {
        if (exp == 0) return;
        if (have && !latex) os << "*";
        os << name;
        if (exp != 1) {
            if (latex)
                os << "^{" << exp << "}";
            else
                os << "^" << exp;
        }
        have = true;
    };
    var("q", e.q);
    var("s", e.s);
    return os.str();
}

std::string poly_to_string(const LaurentPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Int& c = it->second;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << term_to_string(it->first, boost::multiprecision::abs(c), latex);
    }
    return os.str();
}

// Recognize a tracked factor as a quantum integer: [k] or [k]_s.
std::optional<std::string> quantum_label(const LaurentPoly& f, bool latex) {
    if (f.is_zero()) return std::nullopt;
    int max_q = f.terms().rbegin()->first.q;
    if (max_q < 0) return std::nullopt;
    int k = max_q + 1;
    if (f == qint(k)) return "[" + std::to_string(k) + "]";
    if (f == qint_b(k)) return "[" + std::to_string(k) + "]" + (latex ? "_{s}" : "_s");
    return std::nullopt;
}

}  // namespace

std::string LaurentPoly::to_string() const { return poly_to_string(*this, false); }
std::string LaurentPoly::to_latex() const { return poly_to_string(*this, true); }

// ---- Scalar ----

Scalar::Scalar(Int v) : num_(std::move(v)) {}

Scalar::Scalar(LaurentPoly numerator) : num_(std::move(numerator)) {}

Scalar::Scalar(LaurentPoly numerator, LaurentPoly denominator) : num_(std::move(numerator)) {
    if (denominator.is_zero()) throw ZeroDenominatorError();
    push_den_factor(std::move(denominator));
    cancel();
}

Scalar::Scalar(raw_tag, LaurentPoly num, std::map<LaurentPoly, int> f, Int d)
    : num_(std::move(num)), den_factors_(std::move(f)), den_int_(std::move(d)) {}

void Scalar::push_den_factor(LaurentPoly f) {
    Int c = f.content();
    if (c != 1) f = f.divided_by_content(c);
    if (f.lex_min_term().second < 0) {
        f = -f;
        num_ = -num_;
    }
    den_int_ *= c;
    if (!f.is_one()) ++den_factors_[std::move(f)];
}

void Scalar::cancel() {
    if (num_.is_zero()) {
        den_factors_.clear();
        den_int_ = 1;
        return;
    }
    for (auto it = den_factors_.begin(); it != den_factors_.end();) {
        while (it->second > 0) {
            auto q = exact_div(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_factors_.erase(it) : std::next(it);
    }
    Int g = int_gcd(num_.content(), den_int_);
    if (g > 1) {
        num_ = num_.divided_by_content(g);
        den_int_ /= g;
    }
}

LaurentPoly Scalar::den() const {
    LaurentPoly d{den_int_};
    for (const auto& [f, mult] : den_factors_)
        for (int i = 0; i < mult; ++i) d *= f;
    return d;
}

bool Scalar::is_one() const { return *this == Scalar(Int(1)); }

Scalar Scalar::operator-() const { return Scalar(raw_tag{}, -num_, den_factors_, den_int_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Int g = int_gcd(a.den_int_, b.den_int_);
    LaurentPoly na = a.num_ * LaurentPoly(b.den_int_ / g);
    LaurentPoly nb = b.num_ * LaurentPoly(a.den_int_ / g);
    std::map<LaurentPoly, int> den;
    // union with per-factor max multiplicity; numerators pick up the complement
    auto ita = a.den_factors_.begin();
    auto itb = b.den_factors_.begin();
    while (ita != a.den_factors_.end() || itb != b.den_factors_.end()) {
        if (itb == b.den_factors_.end() ||
            (ita != a.den_factors_.end() && ita->first < itb->first)) {
            den[ita->first] = ita->second;
            for (int i = 0; i < ita->second; ++i) nb *= ita->first;
            ++ita;
        } else if (ita == a.den_factors_.end() || itb->first < ita->first) {
            den[itb->first] = itb->second;
            for (int i = 0; i < itb->second; ++i) na *= itb->first;
            ++itb;
        } else {
            int m = std::max(ita->second, itb->second);
            den[ita->first] = m;
            for (int i = 0; i < m - itb->second; ++i) nb *= ita->first;
            for (int i = 0; i < m - ita->second; ++i) na *= ita->first;
            ++ita;
            ++itb;
        }
    }
    Scalar r(Scalar::raw_tag{}, na + nb, std::move(den), a.den_int_ / g * b.den_int_);
    r.cancel();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    std::map<LaurentPoly, int> den = a.den_factors_;
    for (const auto& [f, mult] : b.den_factors_) den[f] += mult;
    Scalar r(Scalar::raw_tag{}, a.num_ * b.num_, std::move(den), a.den_int_ * b.den_int_);
    r.cancel();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    *this = *this + o;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ZeroInversionError();
    Scalar r(raw_tag{}, den(), {}, 1);
    r.push_den_factor(num_);
    r.cancel();
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    return num_ * o.den() == o.num_ * den();
}

std::pair<LaurentPoly, LaurentPoly> Scalar::canonical_pair() const {
    LaurentPoly d = den();
    ExpPair m = d.min_exp();
    d = d.shifted(-m.q, -m.s);
    LaurentPoly n = num_.shifted(-m.q, -m.s);
    Int g = int_gcd(n.content(), d.content());
    if (g > 1) {
        n = n.divided_by_content(g);
        d = d.divided_by_content(g);
    }
    if (d.lex_min_term().second < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d)};
}

nlohmann::json Scalar::to_json() const {
    auto [n, d] = canonical_pair();
    return {{"num", n.to_json()}, {"den", d.to_json()}};
}

Scalar Scalar::from_json(const nlohmann::json& j) {
    return Scalar(LaurentPoly::from_json(j.at("num")), LaurentPoly::from_json(j.at("den")));
}

std::string den_display(const Scalar& s, bool latex) {
    std::ostringstream os;
    bool all_labeled = true;
    std::ostringstream labels;
    for (const auto& [f, mult] : s.den_factors_) {
        auto lab = quantum_label(f, latex);
        if (!lab) {
            all_labeled = false;
            break;
        }
        labels << *lab;
        if (mult != 1) labels << (latex ? "^{" : "^") << mult << (latex ? "}" : "");
    }
    if (s.den_int_ != 1) os << s.den_int_.str();
    if (all_labeled) {
        os << labels.str();
    } else {
        std::string raw = latex ? s.den().to_latex() : s.den().to_string();
        os << "(" << raw << ")";
    }
    return os.str();
}

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::string ns = num_.to_string();
    if (den_factors_.empty() && den_int_ == 1) return ns;
    if (num_.term_count() > 1) ns = "(" + ns + ")";
    return ns + "/" + den_display(*this, false);
}

std::string Scalar::to_latex() const {
    if (is_zero()) return "0";
    if (den_factors_.empty() && den_int_ == 1) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_display(*this, true) + "}";
}

}  // namespace tl
