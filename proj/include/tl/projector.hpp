#ifndef TL_PROJECTOR_HPP
#define TL_PROJECTOR_HPP

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "tl/diagram.hpp"

namespace tl {

/*
 * Finite formal linear combination of basis diagrams with Scalar
 * coefficients. Multiplication extends diagram composition bilinearly.
 * Zero coefficients are dropped eagerly, so equality is key-wise.
 */
class Element {
public:
    using TermMap = std::map<Diagram, Scalar>;

    Element(Flavor f, int n) : flavor_(f), n_(n) {}  // zero element
    static Element identity(Flavor f, int n);
    static Element from_diagram(Flavor f, const Diagram& d, Scalar coeff = Scalar(1));

    Flavor flavor() const { return flavor_; }
    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& e);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& o);
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Coefficient of d; the zero scalar when absent.
    Scalar coeff(const Diagram& d) const;

    // View inside TL_m, m >= n: every diagram gains m-n vertical strands on
    // the right (top labels re-indexed by the linearization).
    Element extend(int m) const;

    nlohmann::json to_json() const;
    std::string to_latex() const;
    std::string to_string() const;

private:
    Flavor flavor_;
    int n_;
    TermMap terms_;
    void add_term(const Diagram& d, const Scalar& c);
};

Element generator_element(Flavor f, int n, int i);

// Jones-Wenzl projection by the Wenzl recurrence:
// P^(n+1) = P^(n) + ([n]/[n+1]) P^(n) e_n P^(n), P^(1) = 1 (type A);
// Q^(n+1) = Q^(n) + ([n]_s/[n+1]_s) Q^(n) e_n Q^(n), Q^(0) = 1 (type B).
Element jw_wenzl(Flavor f, int n);

// The same projection by the Morrison form:
// P^(n+1) = (P^(n)/[n+1]) sum_{i=1}^{n+1} [i] g_{n+1,i}, and the type B
// analogue with [i]_s starting at i = 0.
Element jw_morrison(Flavor f, int n);

// Memo table for the innermost-cap coefficient recurrence, keyed by the
// canonical diagram text. Safe under concurrent lookup/insert.
class CoeffCache {
public:
    bool lookup(const std::string& key, Scalar* out) const;
    void store(const std::string& key, const Scalar& value);
    std::size_t size() const;
    nlohmann::json to_json() const;
    void merge_json(const nlohmann::json& j);

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, Scalar> map_;
};

// Coefficient of d in the Jones-Wenzl projection of its size, computed
// purely by recursion over innermost caps:
// Coeff(D) = sum_i ([i]/[m]) Coeff(D_i), base case Coeff(empty) = 1
// (type B uses [i]_s/[m]_s with the dotted cap counted as i = 0).
Scalar coeff_recursive(Flavor f, const Diagram& d, CoeffCache& cache);
Scalar coeff_recursive(Flavor f, const Diagram& d);  // shared per-flavor cache
CoeffCache& shared_coeff_cache(Flavor f);

struct ProjectorReport {
    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;
    bool all_pass() const;
};

// Defining-property audit: idempotency, two-sided annihilation by every
// applicable generator, identity coefficient 1, and for type B the
// (e_n Q)^2 = -([n+1]_s/[n]_s) e_n Q identities inside TL_{n+1}.
ProjectorReport verify_projector(const Element& e);

}  // namespace tl

#endif
