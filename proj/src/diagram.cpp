#include "tl/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tl {

namespace {

std::string arc_str(const Diagram::Arc& a) {
    return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

}  // namespace

// ---- Diagram ----

Diagram::Diagram(int n, std::vector<Arc> arcs, std::vector<Arc> dots)
    : n_(n), arcs_(std::move(arcs)), dots_(std::move(dots)) {
    if (n_ < 0) throw std::invalid_argument("diagram: negative strand count");
    std::sort(arcs_.begin(), arcs_.end());
    std::sort(dots_.begin(), dots_.end());
    if (static_cast<int>(arcs_.size()) != n_)
        throw std::invalid_argument("diagram: expected " + std::to_string(n_) + " arcs, got " +
                                    std::to_string(arcs_.size()));
    std::vector<char> seen(2 * n_ + 1, 0);
    for (const auto& a : arcs_) {
        if (a.first < 1 || a.second > 2 * n_ || a.first >= a.second)
            throw std::invalid_argument("diagram: invalid arc " + arc_str(a));
        for (int p : {a.first, a.second}) {
            if (seen[p]) throw std::invalid_argument("diagram: point " + std::to_string(p) +
                                                     " appears in two arcs");
            seen[p] = 1;
        }
    }
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
            const Arc& a = arcs_[i];
            const Arc& b = arcs_[j];
            if (a.first < b.first && b.first < a.second && a.second < b.second)
                throw std::invalid_argument("diagram: arcs " + arc_str(a) + " and " + arc_str(b) +
                                            " cross");
        }
    }
    for (std::size_t i = 0; i < dots_.size(); ++i) {
        if (i > 0 && dots_[i - 1] == dots_[i])
            throw std::invalid_argument("diagram: duplicate dot on arc " + arc_str(dots_[i]));
        if (!has_arc(dots_[i]))
            throw std::invalid_argument("diagram: dot on missing arc " + arc_str(dots_[i]));
        if (!is_outermost(dots_[i]))
            throw std::invalid_argument("diagram: dotted arc " + arc_str(dots_[i]) +
                                        " is not outermost");
    }
}

Diagram Diagram::identity(int n) {
    std::vector<Arc> arcs;
    arcs.reserve(n);
    for (int k = 1; k <= n; ++k) arcs.emplace_back(k, 2 * n + 1 - k);
    return Diagram(n, std::move(arcs));
}

bool Diagram::has_arc(const Arc& a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

bool Diagram::has_dot(const Arc& a) const {
    return std::binary_search(dots_.begin(), dots_.end(), a);
}

bool Diagram::is_identity() const { return *this == identity(n_); }

int Diagram::partner(int p) const {
    for (const auto& a : arcs_) {
        if (a.first == p) return a.second;
        if (a.second == p) return a.first;
    }
    throw std::invalid_argument("diagram: point " + std::to_string(p) + " out of range");
}

bool Diagram::is_outermost(const Arc& a) const {
    for (const auto& b : arcs_)
        if (b.first < a.first && a.second < b.second) return false;
    return true;
}

std::vector<Diagram::Arc> Diagram::outermost_arcs() const {
    std::vector<Arc> out;
    for (const auto& a : arcs_)
        if (is_outermost(a)) out.push_back(a);
    return out;
}

std::string Diagram::to_text() const {
    std::ostringstream os;
    for (const auto& a : arcs_) {
        os << arc_str(a);
        if (has_dot(a)) os << "*";
    }
    return os.str();
}

Diagram Diagram::parse(const std::string& text) {
    std::vector<Arc> arcs;
    std::vector<Arc> dots;
    std::vector<std::size_t> arc_pos;  // opening '(' of each arc, for messages
    std::size_t i = 0;
    auto fail = [&](std::size_t at, const std::string& what) {
        throw std::invalid_argument("diagram text: position " + std::to_string(at + 1) + ": " +
                                    what);
    };
    auto read_int = [&]() {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail(start, "expected a point number");
        if (i - start > 6) fail(start, "point number too large");
        return std::stoi(text.substr(start, i - start));
    };
    while (i < text.size()) {
        if (text[i] != '(') fail(i, std::string("expected '(', got '") + text[i] + "'");
        arc_pos.push_back(i);
        ++i;
        int a = read_int();
        if (i >= text.size() || text[i] != ',') fail(i, "expected ','");
        ++i;
        int b = read_int();
        if (i >= text.size() || text[i] != ')') fail(i, "expected ')'");
        ++i;
        bool dotted = i < text.size() && text[i] == '*';
        if (dotted) ++i;
        if (a >= b) fail(arc_pos.back(), "arc endpoints must satisfy i < j");
        arcs.emplace_back(a, b);
        if (dotted) dots.emplace_back(a, b);
    }
    if (arcs.empty()) return Diagram();
    int maxp = 0;
    for (const auto& a : arcs) maxp = std::max(maxp, a.second);
    if (maxp % 2 != 0) fail(text.size() - 1, "odd number of points");
    int n = maxp / 2;
    std::vector<int> owner(2 * n + 1, -1);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        for (int p : {arcs[k].first, arcs[k].second}) {
            if (owner[p] >= 0)
                fail(arc_pos[k], "point " + std::to_string(p) + " appears in two arcs");
            owner[p] = static_cast<int>(k);
        }
    }
    for (int p = 1; p <= 2 * n; ++p)
        if (owner[p] < 0) fail(text.size() - 1, "point " + std::to_string(p) + " is unmatched");
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        for (std::size_t l = 0; l < k; ++l) {
            auto [i1, j1] = arcs[l];
            auto [i2, j2] = arcs[k];
            if ((i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1))
                fail(arc_pos[k], "arc " + arc_str(arcs[k]) + " crosses " + arc_str(arcs[l]));
        }
    }
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (std::find(dots.begin(), dots.end(), arcs[k]) == dots.end()) continue;
        for (const auto& other : arcs)
            if (other.first < arcs[k].first && arcs[k].second < other.second)
                fail(arc_pos[k], "dotted arc " + arc_str(arcs[k]) + " is not outermost");
    }
    return Diagram(n, std::move(arcs), std::move(dots));
}

// ---- generators ----

Diagram generator_diagram(Flavor f, int n, int i) {
    int lo = f == Flavor::B ? 0 : 1;
    if (n < 1 || i < lo || i > n - 1)
        throw std::invalid_argument(std::string("generator e_") + std::to_string(i) +
                                    ": index out of range for type " + flavor_name(f) +
                                    " with n = " + std::to_string(n));
    if (i == 0) {
        Diagram id = Diagram::identity(n);
        return Diagram(n, id.arcs(), {{1, 2 * n}});
    }
    std::vector<Diagram::Arc> arcs{{i, i + 1}, {2 * n - i, 2 * n - i + 1}};
    for (int k = 1; k <= n; ++k)
        if (k != i && k != i + 1) arcs.emplace_back(k, 2 * n + 1 - k);
    return Diagram(n, std::move(arcs));
}

Diagram g_diagram(Flavor f, int n, int i) {
    int lo = f == Flavor::B ? 0 : 1;
    if (n < 0 || i < lo || i > n)
        throw std::invalid_argument(std::string("g_{n,i}: index ") + std::to_string(i) +
                                    " out of range for type " + flavor_name(f) +
                                    " with n = " + std::to_string(n));
    if (i == n) return Diagram::identity(n);
    if (i == 0) {
        Diagram g1 = g_diagram(f, n, 1);
        return Diagram(n, g1.arcs(), {{1, 2}});
    }
    std::vector<Diagram::Arc> arcs{{i, i + 1}, {n + 1, n + 2}};
    int rank = 0;
    for (int k = 1; k <= n; ++k) {
        if (k == i || k == i + 1) continue;
        ++rank;
        arcs.emplace_back(k, 2 * n + 1 - rank);
    }
    return Diagram(n, std::move(arcs));
}

// ---- composition ----

namespace {

// Stacking product before reduction: traced arcs between outer points and
// closed loops in the middle, each carrying a dot count.
struct RawComposite {
    std::vector<std::pair<Diagram::Arc, int>> arcs;  // final arc, dot count
    std::vector<int> loops;                          // dot count per loop
};

RawComposite trace_composite(const Diagram& d1, const Diagram& d2) {
    const int n = d1.n();
    const int m = 2 * n;
    // partner/dot lookup per layer; layer 0 = d1 (top), layer 1 = d2 (bottom)
    std::vector<int> partner[2]{std::vector<int>(m + 1), std::vector<int>(m + 1)};
    std::vector<char> dotted[2]{std::vector<char>(m + 1, 0), std::vector<char>(m + 1, 0)};
    for (int layer : {0, 1}) {
        const Diagram& d = layer == 0 ? d1 : d2;
        for (const auto& a : d.arcs()) {
            partner[layer][a.first] = a.second;
            partner[layer][a.second] = a.first;
            if (d.has_dot(a)) {
                dotted[layer][a.first] = 1;  // dot charged at the smaller endpoint
            }
        }
    }
    // outer points: layer 1 (bottom of d2) points 1..n keep their labels;
    // layer 0 (top of d1) points n+1..2n keep theirs. Interface: d2's top
    // point p is glued to d1's bottom point 2n+1-p.
    auto is_outer = [&](int layer, int p) { return layer == 0 ? p > n : p <= n; };
    std::vector<char> visited[2]{std::vector<char>(m + 1, 0), std::vector<char>(m + 1, 0)};

    RawComposite raw;
    auto walk = [&](int layer, int p, int* dots) {
        // follow the arc at (layer, p), then glue-hop until an outer point
        for (;;) {
            int q = partner[layer][p];
            visited[layer][p] = visited[layer][q] = 1;
            *dots += dotted[layer][std::min(p, q)];
            if (is_outer(layer, q)) return std::make_pair(layer, q);
            p = m + 1 - q;
            layer = 1 - layer;
            if (visited[layer][p]) return std::make_pair(layer, p);  // closed a loop
        }
    };
    for (int start = 1; start <= m; ++start) {
        int layer = start <= n ? 1 : 0;
        if (visited[layer][start]) continue;
        int dots = 0;
        auto [l2, p2] = walk(layer, start, &dots);
        (void)l2;
        raw.arcs.push_back({{std::min(start, p2), std::max(start, p2)}, dots});
    }
    // remaining middle cycles
    for (int layer : {0, 1}) {
        for (int p = 1; p <= m; ++p) {
            if (visited[layer][p] || is_outer(layer, p)) continue;
            int dots = 0;
            walk(layer, p, &dots);
            raw.loops.push_back(dots);
        }
    }
    return raw;
}

}  // namespace

std::pair<Scalar, Diagram> compose(const Diagram& d1, const Diagram& d2) {
    if (d1.n() != d2.n())
        throw std::invalid_argument("compose: strand counts differ (" + std::to_string(d1.n()) +
                                    " vs " + std::to_string(d2.n()) + ")");
    const int n = d1.n();
    RawComposite raw = trace_composite(d1, d2);

    const Scalar minus_loop = Scalar(-qint(2));
    const Scalar minus_dot = Scalar(-qint_b(1));
    const Scalar dotted_loop =
        Scalar(LaurentPoly::monomial(1, 1, -1) + LaurentPoly::monomial(1, -1, 1));

    Scalar factor(1);
    std::vector<Diagram::Arc> arcs;
    std::vector<Diagram::Arc> dots;
    for (const auto& [arc, k] : raw.arcs) {
        arcs.push_back(arc);
        for (int t = 1; t < k; ++t) factor *= minus_dot;
        if (k >= 1) dots.push_back(arc);
    }
    for (int k : raw.loops) {
        if (k == 0) {
            factor *= minus_loop;
        } else {
            for (int t = 1; t < k; ++t) factor *= minus_dot;
            factor *= dotted_loop;
        }
    }
    try {
        return {std::move(factor), Diagram(n, std::move(arcs), std::move(dots))};
    } catch (const std::invalid_argument& e) {
        // a reduced dot landed on a non-outermost arc: not a basis element
        throw std::domain_error(std::string("compose: product left the diagram basis: ") +
                                e.what());
    }
}

// ---- folding bijection ----

DottedPath to_path(const Diagram& d) {
    std::string word(2 * d.n(), 'R');
    for (const auto& a : d.arcs()) word[a.first - 1] = 'U';
    return DottedPath(DyckPath(std::move(word)), d.dots());
}

Diagram from_path(const DottedPath& p) {
    int n = p.path.size();
    std::vector<Diagram::Arc> arcs;
    std::vector<int> stack;
    for (int i = 1; i <= 2 * n; ++i) {
        if (p.path.step(i) == 'U') {
            stack.push_back(i);
        } else {
            arcs.emplace_back(stack.back(), i);
            stack.pop_back();
        }
    }
    return Diagram(n, std::move(arcs), p.dots);
}

// ---- innermost caps ----

std::vector<int> innermost_caps(const Diagram& d) {
    std::vector<int> caps;
    if (d.n() >= 1 && d.has_arc({1, 2}) && d.has_dot({1, 2})) caps.push_back(0);
    for (int i = 1; i <= d.n(); ++i) {
        Diagram::Arc a{i, i + 1};
        if (d.has_arc(a) && !d.has_dot(a)) caps.push_back(i);
    }
    return caps;
}

Diagram remove_cap(const Diagram& d, int i) {
    auto caps = innermost_caps(d);
    if (std::find(caps.begin(), caps.end(), i) == caps.end())
        throw std::invalid_argument("remove_cap: position " + std::to_string(i) +
                                    " is not an innermost cap");
    Diagram::Arc target = i == 0 ? Diagram::Arc{1, 2} : Diagram::Arc{i, i + 1};
    auto relabel = [&](int p) { return p > target.second ? p - 2 : p; };
    std::vector<Diagram::Arc> arcs;
    std::vector<Diagram::Arc> dots;
    for (const auto& a : d.arcs()) {
        if (a == target) continue;
        Diagram::Arc b{relabel(a.first), relabel(a.second)};
        arcs.push_back(b);
        if (d.has_dot(a)) dots.push_back(b);
    }
    return Diagram(d.n() - 1, std::move(arcs), std::move(dots));
}

// ---- enumeration ----

namespace {

std::vector<std::vector<Diagram::Arc>> match_interval(int lo, int hi) {
    if (lo > hi) return {{}};
    std::vector<std::vector<Diagram::Arc>> res;
    for (int m = lo + 1; m <= hi; m += 2) {
        auto inner = match_interval(lo + 1, m - 1);
        auto outer = match_interval(m + 1, hi);
        for (const auto& in : inner) {
            for (const auto& out : outer) {
                std::vector<Diagram::Arc> arcs{{lo, m}};
                arcs.insert(arcs.end(), in.begin(), in.end());
                arcs.insert(arcs.end(), out.begin(), out.end());
                res.push_back(std::move(arcs));
            }
        }
    }
    return res;
}

}  // namespace

std::vector<Diagram> all_diagrams(Flavor f, int n) {
    if (n < 0) throw std::invalid_argument("all_diagrams: negative size");
    std::vector<Diagram> out;
    for (auto& arcs : match_interval(1, 2 * n)) {
        Diagram base(n, arcs);
        if (f == Flavor::A) {
            out.push_back(std::move(base));
            continue;
        }
        auto outer = base.outermost_arcs();
        int subsets = 1 << outer.size();
        for (int mask = 0; mask < subsets; ++mask) {
            std::vector<Diagram::Arc> dots;
            for (std::size_t b = 0; b < outer.size(); ++b)
                if (mask & (1 << b)) dots.push_back(outer[b]);
            out.emplace_back(n, base.arcs(), std::move(dots));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tl
