#include <doctest.h>

#include <random>

#include "tl/scalar.hpp"

using namespace tl;

namespace {

LaurentPoly mono(long c, int eq, int es) { return LaurentPoly::monomial(Int(c), eq, es); }

// Exponent negation q -> q^{-1}, independent of the qint construction.
LaurentPoly mirror_q(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(c, -e.q, e.s);
    return r;
}

LaurentPoly random_poly(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, 3);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (;;) {
        LaurentPoly p;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) p += LaurentPoly::monomial(Int(coeff(rng)), exp(rng), exp(rng));
        if (!nonzero || !p.is_zero()) return p;
    }
}

Scalar random_scalar(std::mt19937_64& rng) {
    return Scalar(random_poly(rng, false), random_poly(rng, true));
}

}  // namespace

TEST_CASE("quantum integers, type A") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == LaurentPoly(Int(1)));
    CHECK(qint(2) == mono(1, 1, 0) + mono(1, -1, 0));
    // [3] by long division of (q^3 - q^-3) / (q - q^-1)
    LaurentPoly num = mono(1, 3, 0) - mono(1, -3, 0);
    LaurentPoly den = mono(1, 1, 0) - mono(1, -1, 0);
    auto q3 = exact_div(num, den);
    REQUIRE(q3.has_value());
    CHECK(*q3 == mono(1, 2, 0) + mono(1, 0, 0) + mono(1, -2, 0));
    CHECK(qint(3) == *q3);
    CHECK_THROWS_AS(qint(-1), std::domain_error);
}

TEST_CASE("quantum integers, type B") {
    CHECK(qint_b(0) == LaurentPoly(Int(1)));
    CHECK(qint_b(1) == mono(1, 0, 1) + mono(1, 0, -1));
    CHECK(qint_b(3) == mono(1, 2, 1) + mono(1, -2, -1));
    CHECK_THROWS_AS(qint_b(-2), std::domain_error);
}

TEST_CASE("[2][n]_s = [n+1]_s + [n-1]_s for 2 <= n <= 32") {
    for (int n = 2; n <= 32; ++n) {
        CHECK(qint(2) * qint_b(n) == qint_b(n + 1) + qint_b(n - 1));
    }
}

TEST_CASE("[n] is symmetric under q -> q^{-1} for 1 <= n <= 32") {
    for (int n = 1; n <= 32; ++n) CHECK(mirror_q(qint(n)) == qint(n));
}

TEST_CASE("laurent ring axioms on random samples") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng, false);
        LaurentPoly b = random_poly(rng, false);
        LaurentPoly c = random_poly(rng, false);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division round trip and failure") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng, true);
        LaurentPoly b = random_poly(rng, true);
        auto q = exact_div(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK_FALSE(exact_div(LaurentPoly(Int(2)), qint(2)).has_value());
    CHECK_FALSE(exact_div(qint(2) * qint_b(1) , qint_b(2)).has_value());
}

TEST_CASE("scalar arithmetic examples") {
    Scalar half(LaurentPoly(Int(1)), qint(2));   // 1/[2]
    Scalar sum = half + half;
    CHECK(sum.num() == LaurentPoly(Int(2)));
    CHECK(sum.den() == qint(2));
    CHECK(sum == Scalar(LaurentPoly(Int(2)), qint(2)));

    Scalar a(qint(2), qint(3));
    Scalar b(qint(3), qint(2));
    CHECK((a * b).is_one());

    // eq((q^2 - q^-2)/(q - q^-1), q + q^-1) by cross-multiplication
    Scalar lhs(mono(1, 2, 0) - mono(1, -2, 0), mono(1, 1, 0) - mono(1, -1, 0));
    CHECK(lhs == Scalar(qint(2)));

    CHECK((a - a).is_zero());
    CHECK(a * a.inv() == Scalar(1));
}

TEST_CASE("scalar error conditions are distinct") {
    CHECK_THROWS_AS(Scalar(qint(2), LaurentPoly()), ZeroDenominatorError);
    CHECK_THROWS_AS(Scalar(0).inv(), ZeroInversionError);
}

TEST_CASE("field axioms and equality congruence on random scalars") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Scalar c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar(0) == a);
        CHECK(a * Scalar(1) == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));

        // congruence: b' equals b by construction, never by representation
        LaurentPoly m = random_poly(rng, true);
        Scalar b2(b.num() * m, b.den() * m);
        CHECK(b2 == b);
        CHECK(a + b2 == a + b);
        CHECK(a * b2 == a * b);

        // equivalence relation
        CHECK(a == a);
        if (a == b) CHECK(b == a);
        if (a == b && b == c) CHECK(a == c);
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Scalar a = random_scalar(rng);
        auto [n1, d1] = a.canonical_pair();
        auto [n2, d2] = Scalar(n1, d1).canonical_pair();
        CHECK(n1 == n2);
        CHECK(d1 == d2);
    }
}

TEST_CASE("canonical serialized form") {
    // 1/[3]: den shifted to q^4 + q^2 + 1, numerator picks up the same shift
    Scalar s(LaurentPoly(Int(1)), qint(3));
    auto [n, d] = s.canonical_pair();
    CHECK(n == mono(1, 2, 0));
    CHECK(d == mono(1, 4, 0) + mono(1, 2, 0) + mono(1, 0, 0));

    // sign rule: den's lexicographically smallest coefficient is positive
    Scalar neg(LaurentPoly(Int(1)), -qint(2));
    auto [nn, nd] = neg.canonical_pair();
    CHECK(nd.lex_min_term().second > 0);
    CHECK(nn == -mono(1, 1, 0));

    // joint integer content is divided out
    Scalar tw(LaurentPoly(Int(2)), LaurentPoly(Int(4)) * qint(2));
    auto [cn, cd] = tw.canonical_pair();
    CHECK(cn == mono(1, 1, 0));
    CHECK(cd == mono(2, 2, 0) + mono(2, 0, 0));
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = random_poly(rng, false);
        CHECK(LaurentPoly::from_json(p.to_json()) == p);
        Scalar s = random_scalar(rng);
        CHECK(Scalar::from_json(s.to_json()) == s);
    }
    // triples are sorted ascending by (eq, es), coefficients as decimal strings
    nlohmann::json j = qint(3).to_json();
    REQUIRE(j.size() == 3);
    CHECK(j[0] == nlohmann::json({"1", -2, 0}));
    CHECK(j[1] == nlohmann::json({"1", 0, 0}));
    CHECK(j[2] == nlohmann::json({"1", 2, 0}));
}

TEST_CASE("display forms") {
    Scalar s(LaurentPoly(Int(1)), qint(3));
    CHECK(s.to_string() == "1/[3]");
    CHECK(s.to_latex() == "\\frac{1}{[3]}");
    Scalar t = Scalar(qint(2), qint_b(4)) * Scalar(LaurentPoly(Int(1)), qint_b(2));
    CHECK(t.to_string() == "(q + q^-1)/[4]_s[2]_s");
    CHECK(Scalar(qint(2)).to_string() == "q + q^-1");
    CHECK(Scalar(0).to_string() == "0");
}
