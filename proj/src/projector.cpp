#include "tl/projector.hpp"

#include <stdexcept>

namespace tl {

namespace {

LaurentPoly qflavor(Flavor f, int k) { return f == Flavor::A ? qint(k) : qint_b(k); }

void check_same_algebra(const Element& a, const Element& b, const char* op) {
    if (a.flavor() != b.flavor() || a.n() != b.n())
        throw std::invalid_argument(std::string(op) + ": flavor or strand count mismatch");
}

}  // namespace

// ---- Element ----

Element Element::identity(Flavor f, int n) {
    return from_diagram(f, Diagram::identity(n));
}

Element Element::from_diagram(Flavor f, const Diagram& d, Scalar coeff) {
    if (f == Flavor::A && !d.dots().empty())
        throw std::invalid_argument("element: dotted diagram in a type A element");
    Element e(f, d.n());
    e.add_term(d, coeff);
    return e;
}

void Element::add_term(const Diagram& d, const Scalar& c) {
    if (d.n() != n_) throw std::invalid_argument("element: diagram size mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element operator+(const Element& a, const Element& b) {
    check_same_algebra(a, b, "add");
    Element r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
}

Element operator-(const Element& a, const Element& b) {
    check_same_algebra(a, b, "sub");
    Element r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, -c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    check_same_algebra(*this, o, "add");
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

Element operator*(const Scalar& c, const Element& e) {
    Element r(e.flavor_, e.n_);
    if (c.is_zero()) return r;
    for (const auto& [d, v] : e.terms_) r.add_term(d, c * v);
    return r;
}

Element operator*(const Element& a, const Element& b) {
    check_same_algebra(a, b, "mul");
    Element r(a.flavor_, a.n_);
    for (const auto& [d1, c1] : a.terms_) {
        for (const auto& [d2, c2] : b.terms_) {
            auto [factor, d] = compose(d1, d2);
            r.add_term(d, c1 * c2 * factor);
        }
    }
    return r;
}

bool Element::operator==(const Element& o) const {
    if (flavor_ != o.flavor_ || n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [d, c] : terms_) {
        if (d != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

Scalar Element::coeff(const Diagram& d) const {
    if (d.n() != n_) throw std::invalid_argument("coeff: diagram size mismatch");
    if (flavor_ == Flavor::A && !d.dots().empty())
        throw std::invalid_argument("coeff: dotted diagram in a type A element");
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Element Element::extend(int m) const {
    if (m < n_) throw std::invalid_argument("extend: target strand count below current");
    if (m == n_) return *this;
    Element r(flavor_, m);
    const int shift = 2 * (m - n_);
    for (const auto& [d, c] : terms_) {
        auto relabel = [&](int p) { return p <= n_ ? p : p + shift; };
        std::vector<Diagram::Arc> arcs;
        std::vector<Diagram::Arc> dots;
        for (const auto& a : d.arcs()) arcs.emplace_back(relabel(a.first), relabel(a.second));
        for (const auto& a : d.dots()) dots.emplace_back(relabel(a.first), relabel(a.second));
        for (int k = n_ + 1; k <= m; ++k) arcs.emplace_back(k, 2 * m + 1 - k);
        r.add_term(Diagram(m, std::move(arcs), std::move(dots)), c);
    }
    return r;
}

Element generator_element(Flavor f, int n, int i) {
    return Element::from_diagram(f, generator_diagram(f, n, i));
}

// ---- Jones-Wenzl recurrences ----

Element jw_wenzl(Flavor f, int n) {
    int base = f == Flavor::A ? 1 : 0;
    if (n < base)
        throw std::invalid_argument(std::string("jw_wenzl: n out of range for type ") +
                                    flavor_name(f));
    Element p = Element::identity(f, base);
    for (int k = base; k < n; ++k) {
        Element pk = p.extend(k + 1);
        Element e_k = generator_element(f, k + 1, k);
        Scalar ratio(qflavor(f, k), qflavor(f, k + 1));
        p = pk + ratio * (pk * e_k * pk);
    }
    return p;
}

Element jw_morrison(Flavor f, int n) {
    int base = f == Flavor::A ? 1 : 0;
    if (n < base)
        throw std::invalid_argument(std::string("jw_morrison: n out of range for type ") +
                                    flavor_name(f));
    Element p = Element::identity(f, base);
    for (int k = base; k < n; ++k) {
        Element sum(f, k + 1);
        for (int i = f == Flavor::A ? 1 : 0; i <= k + 1; ++i) {
            sum += Scalar(qflavor(f, i)) * Element::from_diagram(f, g_diagram(f, k + 1, i));
        }
        Scalar inv_top = Scalar(LaurentPoly(Int(1)), qflavor(f, k + 1));
        p = inv_top * (p.extend(k + 1) * sum);
    }
    return p;
}

// ---- coefficient recurrence ----

bool CoeffCache::lookup(const std::string& key, Scalar* out) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    *out = it->second;
    return true;
}

void CoeffCache::store(const std::string& key, const Scalar& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(key, value);
}

std::size_t CoeffCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
}

nlohmann::json CoeffCache::to_json() const {
    std::lock_guard<std::mutex> lock(mutex_);
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : map_) j[k] = v.to_json();
    return j;
}

void CoeffCache::merge_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("coeff cache: expected a json object");
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto it = j.begin(); it != j.end(); ++it) map_.emplace(it.key(), Scalar::from_json(*it));
}

CoeffCache& shared_coeff_cache(Flavor f) {
    static CoeffCache cache_a;
    static CoeffCache cache_b;
    return f == Flavor::A ? cache_a : cache_b;
}

Scalar coeff_recursive(Flavor f, const Diagram& d, CoeffCache& cache) {
    if (f == Flavor::A && !d.dots().empty())
        throw std::invalid_argument("coeff_recursive: dotted diagram in type A");
    if (d.n() == 0) return Scalar(1);
    std::string key = d.to_text();
    Scalar cached;
    if (cache.lookup(key, &cached)) return cached;
    Scalar sum(0);
    const LaurentPoly total = qflavor(f, d.n());
    for (int i : innermost_caps(d)) {
        Scalar weight(qflavor(f, i), total);
        sum += weight * coeff_recursive(f, remove_cap(d, i), cache);
    }
    cache.store(key, sum);
    return sum;
}

Scalar coeff_recursive(Flavor f, const Diagram& d) {
    return coeff_recursive(f, d, shared_coeff_cache(f));
}

// ---- verification ----

bool ProjectorReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

ProjectorReport verify_projector(const Element& e) {
    ProjectorReport report;
    const Flavor f = e.flavor();
    const int n = e.n();
    auto add = [&](const std::string& name, bool pass) { report.checks.push_back({name, pass}); };

    add("idempotent", e * e == e);
    add("identity-coefficient-1", e.coeff(Diagram::identity(n)).is_one());
    for (int i = f == Flavor::A ? 1 : 0; i <= n - 1; ++i) {
        Element gi = generator_element(f, n, i);
        add("e" + std::to_string(i) + "-left-annihilates", (gi * e).is_zero());
        add("e" + std::to_string(i) + "-right-annihilates", (e * gi).is_zero());
    }
    if (f == Flavor::B && n >= 1) {
        // Prop-style identities inside TL_{n+1}
        Element ext = e.extend(n + 1);
        Element e_n = generator_element(f, n + 1, n);
        Scalar ratio = -Scalar(qint_b(n + 1), qint_b(n));
        Element en_q = e_n * ext;
        add("(e_n Q)^2 = -[n+1]_s/[n]_s e_n Q", en_q * en_q == ratio * en_q);
        Element sandwich = ext * e_n * ext;
        add("(Q e_n Q)^2 = -[n+1]_s/[n]_s Q e_n Q",
            sandwich * sandwich == ratio * sandwich);
    }
    return report;
}

// ---- serialization ----

nlohmann::json Element::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [d, c] : terms_) {
        nlohmann::json arcs = nlohmann::json::array();
        for (const auto& a : d.arcs()) arcs.push_back({a.first, a.second});
        nlohmann::json dots = nlohmann::json::array();
        for (const auto& a : d.dots()) dots.push_back({a.first, a.second});
        terms.push_back({{"arcs", arcs}, {"dots", dots}, {"coeff", c.to_json()}});
    }
    return {{"flavor", flavor_name(flavor_)}, {"n", n_}, {"terms", terms}};
}

namespace {

// Prefer a generator word when the diagram is one we can name.
std::string diagram_display(Flavor f, const Diagram& d, bool latex) {
    if (d.is_identity()) return latex ? "\\mathbf{1}" : "1";
    for (int i = f == Flavor::B ? 0 : 1; i <= d.n() - 1; ++i) {
        if (d == generator_diagram(f, d.n(), i))
            return latex ? "e_{" + std::to_string(i) + "}" : "e_" + std::to_string(i);
    }
    return latex ? "\\texttt{" + d.to_text() + "}" : d.to_text();
}

}  // namespace

std::string Element::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (!c.is_one()) out += c.to_latex() + " ";
        out += diagram_display(flavor_, d, true);
    }
    return out;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (!c.is_one()) out += c.to_string() + " * ";
        out += diagram_display(flavor_, d, false);
    }
    return out;
}

}  // namespace tl
