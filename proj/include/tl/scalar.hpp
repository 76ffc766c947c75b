#ifndef TL_SCALAR_HPP
#define TL_SCALAR_HPP

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace tl {

using Int = boost::multiprecision::cpp_int;

// Exponent pair of a monomial q^q_exp * s^s_exp.
struct ExpPair {
    int q = 0;
    int s = 0;
    auto operator<=>(const ExpPair&) const = default;
};

/*
 * Integer Laurent polynomial in the two variables q and s.
 *
 * Stored as a map exponent pair -> nonzero coefficient; the zero
 * polynomial is the empty map.
 */
class LaurentPoly {
public:
    using TermMap = std::map<ExpPair, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    static LaurentPoly monomial(Int coeff, int q_exp, int s_exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Total order for use as a map key (lexicographic over the term map).
    bool operator<(const LaurentPoly& o) const;

    // Multiply by the monomial q^dq * s^ds.
    LaurentPoly shifted(int dq, int ds) const;
    // gcd of all coefficients (nonnegative; 0 for the zero polynomial).
    Int content() const;
    // Componentwise minimum exponents over all terms. Requires nonzero.
    ExpPair min_exp() const;
    // Smallest exponent pair in lex order and its coefficient. Requires nonzero.
    const std::pair<const ExpPair, Int>& lex_min_term() const;
    // Divide every coefficient by d (must divide exactly).
    LaurentPoly divided_by_content(const Int& d) const;

    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);
    std::string to_string() const;
    std::string to_latex() const;

private:
    TermMap terms_;
    void insert_term(const ExpPair& e, Int c);
};

// Exact division a / b in the Laurent ring; nullopt when b does not divide a.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0.
LaurentPoly qint(int n);
// Type B quantum integer: [0]_s = 1, [n]_s = q^{n-1} s + q^{1-n} s^{-1} for n >= 1.
LaurentPoly qint_b(int n);

struct ZeroDenominatorError : std::domain_error {
    ZeroDenominatorError() : std::domain_error("scalar: zero denominator") {}
};
struct ZeroInversionError : std::domain_error {
    ZeroInversionError() : std::domain_error("scalar: inversion of zero") {}
};

/*
 * Element of the fraction field of the Laurent ring.
 *
 * The denominator is kept as a multiset of sign/content-normalized
 * polynomial factors times a positive integer. Sums align common factors
 * and the numerator is reduced by exact division against the tracked
 * factors; no polynomial gcd is ever computed. Equality is mathematical
 * (cross-multiplication), never representational.
 */
class Scalar {
public:
    Scalar() = default;                      // zero
    Scalar(int v) : Scalar(Int(v)) {}        // NOLINT: implicit by design
    explicit Scalar(Int v);
    explicit Scalar(LaurentPoly numerator);
    Scalar(LaurentPoly numerator, LaurentPoly denominator);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar inv() const;                      // throws ZeroInversionError on zero

    // Cross-multiplication equality: num*o.den == o.num*den.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const LaurentPoly& num() const { return num_; }
    LaurentPoly den() const;                 // materialized denominator product

    // (num, den) pair in the canonical interchange form: den shifted so its
    // minimal q- and s-exponents are 0 (same shift applied to num), joint
    // integer content divided out, den's lex-smallest coefficient positive.
    std::pair<LaurentPoly, LaurentPoly> canonical_pair() const;

    nlohmann::json to_json() const;
    static Scalar from_json(const nlohmann::json& j);
    std::string to_string() const;
    std::string to_latex() const;

private:
    LaurentPoly num_;                        // zero scalar <=> zero numerator
    std::map<LaurentPoly, int> den_factors_; // factor -> multiplicity, each normalized
    Int den_int_ = 1;                        // positive integer part of the denominator

    void push_den_factor(LaurentPoly f);     // normalizes sign/content into num_/den_int_
    void cancel();
    struct raw_tag {};
    Scalar(raw_tag, LaurentPoly num, std::map<LaurentPoly, int> f, Int d);
    friend std::string den_display(const Scalar& s, bool latex);
};

}  // namespace tl

#endif
