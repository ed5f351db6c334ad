#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/rational.hpp"
#include "binform/tpoly.hpp"
#include "binform/ztpoly.hpp"

#include "golden_series.hpp"
#include "test_util.hpp"

using namespace binform;
using testutil::make_rng;
using testutil::random_tpoly;
using testutil::random_ztpoly;

TEST_CASE("TPoly canonical form") {
    TPoly p = TPoly::from_terms({{3, Int(2)}, {0, Int(1)}, {3, Int(-2)}, {1, Int(5)}});
    CHECK(p.terms().size() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 5);
    CHECK(p.coeff(3) == 0);
    CHECK(p.degree() == 1);
    CHECK(TPoly::zero().is_zero());
    CHECK(TPoly::zero().degree() == -1);
    CHECK(TPoly::monomial(4, Int(0)).is_zero());
    CHECK(TPoly::one_minus_tk(0).is_zero());  // 1 - t^0
    CHECK_THROWS_AS(TPoly::monomial(-1), std::invalid_argument);
}

TEST_CASE("TPoly arithmetic basics") {
    TPoly p = TPoly::from_terms({{0, Int(1)}, {2, Int(-3)}});
    CHECK(p + TPoly::zero() == p);
    CHECK(p - p == TPoly::zero());
    CHECK(p * TPoly::one() == p);
    CHECK(p * TPoly::zero() == TPoly::zero());
    CHECK(-(-p) == p);
    CHECK(p.scaled(Int(2)).coeff(2) == -6);
    CHECK(p.shifted(3).degree() == 5);
    CHECK(p.substituted_power(2) == TPoly::from_terms({{0, Int(1)}, {4, Int(-3)}}));
    CHECK((TPoly::one_minus_tk(1) * TPoly::from_terms({{0, Int(1)}, {1, Int(1)}})) ==
          TPoly::one_minus_tk(2));
}

TEST_CASE("TPoly multiplication against dense convolution") {
    auto rng = make_rng(12001);
    for (int it = 0; it < 300; ++it) {
        TPoly p = random_tpoly(rng, 12, 5, 6);
        TPoly q = random_tpoly(rng, 12, 5, 6);
        CHECK(p * q == testutil::convolve(p, q));
        CHECK(p * q == q * p);
    }
}

TEST_CASE("TPoly exact division") {
    // (1 - t^4) / (1 - t^2) = 1 + t^2
    auto q = exact_div_t(TPoly::one_minus_tk(4), TPoly::one_minus_tk(2));
    REQUIRE(q.has_value());
    CHECK(*q == TPoly::from_terms({{0, Int(1)}, {2, Int(1)}}));
    // (1 - t^3) / (1 - t^2) is not a polynomial
    CHECK_FALSE(exact_div_t(TPoly::one_minus_tk(3), TPoly::one_minus_tk(2)).has_value());
    // non-divisible coefficients
    CHECK_FALSE(exact_div_t(TPoly::monomial(2, Int(3)), TPoly::monomial(1, Int(2))).has_value());
    CHECK_FALSE(exact_div_t(TPoly::one(), TPoly::zero()).has_value());
    CHECK(*exact_div_t(TPoly::zero(), TPoly::one_minus_tk(2)) == TPoly::zero());
}

TEST_CASE("TPoly division inverts multiplication") {
    auto rng = make_rng(12002);
    for (int it = 0; it < 300; ++it) {
        TPoly p = random_tpoly(rng, 10, 4, 5);
        TPoly q = random_tpoly(rng, 10, 4, 5);
        if (q.is_zero()) continue;
        auto r = exact_div_t(p * q, q);
        REQUIRE(r.has_value());
        CHECK(*r == p);
    }
}

TEST_CASE("ZTPoly canonical form and accessors") {
    ZTPoly p = ZTPoly::from_terms({{1, 2, Int(3)}, {0, 0, Int(1)}, {1, 2, Int(-3)}, {2, 1, Int(4)}});
    CHECK(p.size() == 2);
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(2, 1) == 4);
    CHECK(p.coeff(1, 2) == 0);
    CHECK(p.max_z() == 2);
    CHECK(p.max_t() == 1);
    CHECK(ZTPoly::zero().max_z() == -1);
    CHECK_THROWS_AS(ZTPoly::monomial(0, -1), std::invalid_argument);
    // terms are lexicographic in (z, t)
    ZTPoly q = ZTPoly::from_terms({{1, 0, Int(1)}, {0, 5, Int(1)}, {1, 1, Int(1)}});
    CHECK(q.terms()[0].t == 5);
    CHECK(q.terms()[1].z == 1);
    CHECK(q.terms()[1].t == 0);
}

TEST_CASE("ZTPoly ring identities on random inputs") {
    auto rng = make_rng(12003);
    for (int it = 0; it < 150; ++it) {
        ZTPoly p = random_ztpoly(rng, 6, 6, 4, 5);
        ZTPoly q = random_ztpoly(rng, 6, 6, 4, 5);
        ZTPoly r = random_ztpoly(rng, 6, 6, 4, 5);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p - p == ZTPoly::zero());
        CHECK(p * ZTPoly::one() == p);
    }
}

TEST_CASE("ZTPoly embeds of univariate products") {
    auto rng = make_rng(12004);
    for (int it = 0; it < 100; ++it) {
        TPoly p = random_tpoly(rng, 8, 4, 5);
        TPoly q = random_tpoly(rng, 8, 4, 5);
        CHECK(ZTPoly::from_tpoly_t(p * q) == ZTPoly::from_tpoly_t(p) * ZTPoly::from_tpoly_t(q));
        CHECK(ZTPoly::from_tpoly_z(p * q) == ZTPoly::from_tpoly_z(p) * ZTPoly::from_tpoly_z(q));
    }
}

TEST_CASE("ZTPoly mul_binomial agrees with general product") {
    auto rng = make_rng(12005);
    for (int it = 0; it < 150; ++it) {
        ZTPoly p = random_ztpoly(rng, 5, 5, 4, 6);
        int a = it % 3, b = (it / 3) % 3;
        if (a == 0 && b == 0) a = 1;
        ZTPoly binom = ZTPoly::one() - ZTPoly::monomial(a, b);
        CHECK(p.mul_binomial(a, b) == p * binom);
    }
}

TEST_CASE("ZTPoly exact division by a binomial") {
    // (1 - z^2 t^2) / (1 - z t) = 1 + z t
    ZTPoly n = ZTPoly::one().mul_binomial(1, 1).mul_binomial(1, 1);  // (1-zt)^2
    auto q = exact_div_binomial(ZTPoly::one() - ZTPoly::monomial(2, 2), 1, 1);
    REQUIRE(q.has_value());
    CHECK(*q == ZTPoly::from_terms({{0, 0, Int(1)}, {1, 1, Int(1)}}));
    auto q2 = exact_div_binomial(n, 1, 1);
    REQUIRE(q2.has_value());
    CHECK(*q2 == ZTPoly::one().mul_binomial(1, 1));
    // (1 + z) is not divisible by (1 - z)
    ZTPoly oneplus = ZTPoly::from_terms({{0, 0, Int(1)}, {1, 0, Int(1)}});
    CHECK_FALSE(exact_div_binomial(oneplus, 1, 0).has_value());
    CHECK(*exact_div_binomial(ZTPoly::zero(), 1, 0) == ZTPoly::zero());
    CHECK_THROWS_AS(exact_div_binomial(oneplus, 0, 0), std::invalid_argument);
}

TEST_CASE("ZTPoly binomial division inverts binomial multiplication") {
    auto rng = make_rng(12006);
    const int pairs[][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 3}, {4, 0}, {0, 5}, {3, 1}};
    for (int it = 0; it < 200; ++it) {
        ZTPoly p = random_ztpoly(rng, 6, 6, 5, 6);
        auto [a, b] = pairs[it % 7];
        auto q = exact_div_binomial(p.mul_binomial(a, b), a, b);
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
}

TEST_CASE("truncated geometric multiplication") {
    // 1 / (1 - z) on the box z <= 3
    ZTPoly g = mul_truncated_geometric(ZTPoly::one(), 1, 0, 3, 0);
    CHECK(g == ZTPoly::from_terms(
                   {{0, 0, Int(1)}, {1, 0, Int(1)}, {2, 0, Int(1)}, {3, 0, Int(1)}}));
    // against exact division: (p * (1-z^a t^b)) / (1-z^a t^b) truncated
    auto rng = make_rng(12007);
    for (int it = 0; it < 100; ++it) {
        ZTPoly p = random_ztpoly(rng, 5, 5, 4, 6);
        int a = 1 + it % 2, b = it % 3;
        ZTPoly whole = p.mul_binomial(a, b);
        CHECK(mul_truncated_geometric(whole, a, b, 8, 8) == p.truncated(8, 8));
    }
    CHECK(ZTPoly::one().truncated(5, 5) == ZTPoly::one());
}

TEST_CASE("BinomFactor validation") {
    CHECK_THROWS_AS(BinomFactor(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BinomFactor(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(BinomFactor(1, 1, 0), std::invalid_argument);
    BinomFactor f(2, 3, 4);
    CHECK(f.a == 2);
    CHECK(f.b == 3);
    CHECK(f.m == 4);
}

TEST_CASE("FactoredRational merges and sorts denominator factors") {
    FactoredRational f(ZTPoly::one(),
                       {BinomFactor(2, 0), BinomFactor(1, 1), BinomFactor(2, 0, 2)});
    REQUIRE(f.denominator().size() == 2);
    CHECK(f.denominator()[0] == BinomFactor(1, 1));
    CHECK(f.denominator()[1] == BinomFactor(2, 0, 3));
    CHECK(f.with_factor(BinomFactor(1, 1)).denominator()[0] == BinomFactor(1, 1, 2));
    // zero numerator collapses the denominator
    FactoredRational z(ZTPoly::zero(), {BinomFactor(1, 1)});
    CHECK(z.denominator().empty());
}

TEST_CASE("denominator_poly expands the factor multiset") {
    FactoredRational f(ZTPoly::one(), {BinomFactor(1, 2), BinomFactor(2, 0)});
    ZTPoly expected = ZTPoly::one().mul_binomial(1, 2).mul_binomial(2, 0);
    CHECK(denominator_poly(f) == expected);
    CHECK(denominator_poly(FactoredRational()) == ZTPoly::one());
}

TEST_CASE("normalize cancels whole factors") {
    // (1 - z^2) / ((1-z)(1-z^2)) -> 1 / (1-z)
    ZTPoly num = ZTPoly::one().mul_binomial(2, 0);
    FactoredRational f(num, {BinomFactor(1, 0), BinomFactor(2, 0)});
    FactoredRational n = normalize(f);
    CHECK(n == FactoredRational(ZTPoly::one(), {BinomFactor(1, 0)}));
}

TEST_CASE("normalize lowers factor exponents through cofactors") {
    // (1 + z^2) / (1 - z^4) -> 1 / (1 - z^2)
    ZTPoly num = ZTPoly::from_terms({{0, 0, Int(1)}, {2, 0, Int(1)}});
    FactoredRational f(num, {BinomFactor(4, 0)});
    FactoredRational n = normalize(f);
    CHECK(n == FactoredRational(ZTPoly::one(), {BinomFactor(2, 0)}));
    // mixed variables: (1 + z t) / (1 - z^2 t^2) -> 1 / (1 - z t)
    ZTPoly num2 = ZTPoly::from_terms({{0, 0, Int(1)}, {1, 1, Int(1)}});
    CHECK(normalize(FactoredRational(num2, {BinomFactor(2, 2)})) ==
          FactoredRational(ZTPoly::one(), {BinomFactor(1, 1)}));
}

TEST_CASE("normalize preserves the rational function") {
    auto rng = make_rng(12008);
    const int pairs[][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 2}, {4, 0}, {1, 2}};
    for (int it = 0; it < 120; ++it) {
        ZTPoly p = random_ztpoly(rng, 4, 4, 3, 4);
        if (p.is_zero()) continue;
        std::vector<BinomFactor> den;
        for (int k = 0; k < 3; ++k) {
            auto [a, b] = pairs[(it + k) % 7];
            den.emplace_back(a, b);
        }
        // make some cancellations possible
        ZTPoly num = (it % 2) ? p.mul_binomial(den[0].a, den[0].b) : p;
        FactoredRational f(num, den);
        FactoredRational n = normalize(f);
        CHECK(equal_rational(f, n));
        CHECK(expand_truncated(f, 6, 6) == expand_truncated(n, 6, 6));
        CHECK(normalize(n) == n);  // idempotent
    }
}

TEST_CASE("equal_rational distinguishes values, not representations") {
    // 1/(1-z) == (1+z)/(1-z^2)
    FactoredRational a(ZTPoly::one(), {BinomFactor(1, 0)});
    FactoredRational b(ZTPoly::from_terms({{0, 0, Int(1)}, {1, 0, Int(1)}}), {BinomFactor(2, 0)});
    CHECK(equal_rational(a, b));
    CHECK_FALSE(a == b);
    FactoredRational c(ZTPoly::from_terms({{0, 0, Int(2)}, {1, 0, Int(1)}}), {BinomFactor(2, 0)});
    CHECK_FALSE(equal_rational(a, c));
}

TEST_CASE("expand_truncated on simple closed forms") {
    // 1/(1-zt): diagonal ones
    ZTPoly e = expand_truncated(golden::p1(), 3, 3);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) CHECK(e.coeff(i, j) == (i == j ? 1 : 0));
    // 1/((1-z t^2)(1-z^2)) on the (2,2) box
    CHECK(expand_truncated(golden::p2(), 2, 2) ==
          ZTPoly::from_terms({{0, 0, Int(1)}, {1, 2, Int(1)}, {2, 0, Int(1)}}));
    // constant box
    CHECK(expand_truncated(golden::p2(), 0, 0) == ZTPoly::one());
    CHECK_THROWS_AS(expand_truncated(golden::p1(), -1, 0), std::invalid_argument);
}

TEST_CASE("expand_truncated times the denominator recovers the numerator") {
    auto rng = make_rng(12009);
    const int pairs[][2] = {{1, 0}, {0, 2}, {1, 1}, {2, 1}, {3, 0}};
    for (int it = 0; it < 100; ++it) {
        ZTPoly num = random_ztpoly(rng, 3, 3, 4, 4);
        std::vector<BinomFactor> den;
        for (int k = 0; k <= it % 3; ++k) {
            auto [a, b] = pairs[(it + k) % 5];
            den.emplace_back(a, b);
        }
        FactoredRational f(num, den);
        const int I = 9, J = 9;
        ZTPoly back = expand_truncated(f, I, J) * denominator_poly(f);
        CHECK(back.truncated(I, J) == num.truncated(I, J));
    }
}

TEST_CASE("text rendering") {
    CHECK(render(golden::p1(), RenderFormat::text) == "1/(1-z*t)");
    CHECK(render(golden::p2(), RenderFormat::text) == "1/((1-z*t^2)*(1-z^2))");
    CHECK(render(golden::p3(), RenderFormat::text) ==
          "(1 - z*t + z^2*t^2)/((1-z*t)*(1-z*t^3)*(1-z^4))");
    CHECK(render(FactoredRational(ZTPoly::zero()), RenderFormat::text) == "0");
    CHECK(render(FactoredRational(ZTPoly::monomial(2, 0, Int(-3))), RenderFormat::text) ==
          "-3*z^2");
    FactoredRational powed(ZTPoly::one(), {BinomFactor(1, 0, 2)});
    CHECK(render(powed, RenderFormat::text) == "1/((1-z)^2)");
}

TEST_CASE("latex rendering") {
    CHECK(render(golden::p1(), RenderFormat::latex) == "\\frac{1}{(1-zt)}");
    CHECK(render(golden::p3(), RenderFormat::latex) ==
          "\\frac{1-zt+z^{2}t^{2}}{(1-zt)(1-zt^{3})(1-z^{4})}");
    FactoredRational powed(ZTPoly::one(), {BinomFactor(2, 0, 3)});
    CHECK(render(powed, RenderFormat::latex) == "\\frac{1}{(1-z^{2})^{3}}");
}

TEST_CASE("json rendering and parsing round-trip") {
    for (int d = 1; d <= 5; ++d) {
        FactoredRational f = golden::series(d);
        FactoredRational back = parse_json(render(f, RenderFormat::json));
        CHECK(back == f);
    }
    CHECK(render(golden::p2(), RenderFormat::json) ==
          "{\"numerator\":[{\"z\":0,\"t\":0,\"c\":\"1\"}],"
          "\"denominator\":[{\"z\":1,\"t\":2,\"m\":1},{\"z\":2,\"t\":0,\"m\":1}]}");
}

TEST_CASE("json parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(parse_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(parse_json("{\"numerator\":[],\"denominator\":[{\"z\":0,\"t\":0,\"m\":1}]}"),
                    std::runtime_error);
    CHECK_THROWS_AS(
        parse_json("{\"numerator\":[{\"z\":0,\"t\":0,\"c\":\"xyz\"}],\"denominator\":[]}"),
        std::runtime_error);
    // extra top-level keys are fine (cache files have a header)
    FactoredRational f = parse_json(
        "{\"d\":1,\"numerator\":[{\"z\":0,\"t\":0,\"c\":\"1\"}],\"denominator\":[]}");
    CHECK(f == FactoredRational());
}

TEST_CASE("big coefficients survive the json round-trip") {
    Int big("123456789012345678901234567890");
    FactoredRational f(ZTPoly::monomial(1, 1, big) + ZTPoly::monomial(0, 0, Int(-1)),
                       {BinomFactor(1, 1)});
    CHECK(parse_json(render(f, RenderFormat::json)) == f);
}
