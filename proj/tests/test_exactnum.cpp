#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastacks/exactnum.hpp"

#include <random>

using namespace parastacks;

namespace {

IntPoly ipoly(std::vector<long> c, const std::string& var = "a") {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(var, std::move(v));
}

IntSeries iseries(std::vector<long> c, const std::string& var = "t") {
    IntSeries s(var, static_cast<int>(c.size()) - 1, Int(0));
    for (size_t n = 0; n < c.size(); ++n) s.set_coeff(static_cast<int>(n), Int(c[n]));
    return s;
}

RatSeries random_rat_series(std::mt19937& rng, int order, bool unit_constant) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    RatSeries s("t", order, Rat(0));
    for (int n = 0; n <= order; ++n) s.set_coeff(n, make_rat(num(rng), den(rng)));
    if (unit_constant) s.set_coeff(0, Rat(1));
    return s;
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("3/4") == make_rat(3, 4));
    CHECK(rat_from_string("-15/100") == make_rat(-3, 20));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("0.5"));
}

TEST_CASE("binomials and catalans") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(2, 5) == 0);
    CHECK(catalan(0) == 1);
    CHECK(catalan(5) == 42);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("polynomial arithmetic and symbols") {
    IntPoly p = ipoly({1, 2});       // 1 + 2a
    IntPoly q = ipoly({0, 0, 3});    // 3a^2
    CHECK((p * q) == ipoly({0, 0, 3, 6}));
    CHECK((p + q).degree() == 2);
    CHECK(p.eval(Int(5)) == 11);

    IntPoly other("b", {Int(1), Int(1)});
    CHECK_THROWS_AS(p * other, std::invalid_argument);
    // constants unify with any symbol
    IntPoly c = IntPoly::constant("b", Int(7));
    CHECK((p * c) == ipoly({7, 14}));
}

TEST_CASE("series_mul examples") {
    IntSeries one_plus = iseries({1, 1, 0}, "u");
    IntSeries one_minus = iseries({1, -1, 0}, "u");
    CHECK((one_plus * one_minus) == iseries({1, 0, -1}, "u"));

    IntSeries f = iseries({4, -1, 3, 9}, "u");
    IntSeries one = IntSeries::one("u", 3, Int(0));
    CHECK((f * one) == f);

    // Coefficient of u^3 in (sum C_n u^n)^2, against the direct convolution
    // 2(C0 C3 + C1 C2) computed independently.
    IntSeries cat("u", 3, Int(0));
    for (int n = 0; n <= 3; ++n) cat.set_coeff(n, catalan(n));
    Int conv = 0;
    for (int k = 0; k <= 3; ++k) conv += catalan(k) * catalan(3 - k);
    CHECK(conv == 14);
    CHECK((cat * cat).coeff(3) == conv);
}

TEST_CASE("series_inverse examples") {
    CHECK(iseries({1, -1, 0, 0}).inverse() == iseries({1, 1, 1, 1}));
    CHECK(iseries({1, 2, 0}, "u").inverse() == iseries({1, -2, 4}, "u"));

    // Long division against the two-stacks counting series 1,1,2,6,23.
    IntSeries s = iseries({1, 1, 2, 6, 23});
    CHECK(s.inverse() == iseries({1, -1, -1, -3, -12}));
    CHECK((s * s.inverse()) == IntSeries::one("t", 4, Int(0)));

    CHECK_THROWS_AS(iseries({2, 1}).inverse(), std::domain_error);
}

TEST_CASE("series_sqrt examples") {
    RatSeries one = RatSeries::one("v", 4, Rat(0));
    CHECK(one.sqrt() == one);

    RatSeries f("v", 2, Rat(0));
    f.set_coeff(0, Rat(1));
    f.set_coeff(1, Rat(-4));
    RatSeries g = f.sqrt();
    CHECK(g.coeff(0) == 1);
    CHECK(g.coeff(1) == -2);
    CHECK(g.coeff(2) == -2);

    RatSeries bad("v", 2, Rat(0));
    bad.set_coeff(0, Rat(2));
    CHECK_THROWS_AS(bad.sqrt(), std::domain_error);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        RatSeries h = random_rat_series(rng, 6, true);
        CHECK((h * h).sqrt() == h);
        RatSeries back = h.sqrt();
        CHECK((back * back) == h);
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        RatSeries a = random_rat_series(rng, 5, false);
        RatSeries b = random_rat_series(rng, 5, false);
        RatSeries c = random_rat_series(rng, 5, false);
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        RatSeries u = random_rat_series(rng, 5, true);
        CHECK((u * u.inverse()) == RatSeries::one("t", 5, Rat(0)));
    }
}

TEST_CASE("mixed orders and variables are refused") {
    IntSeries a = iseries({1, 2, 3});
    IntSeries b = iseries({1, 2});
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    IntSeries c("u", 2, Int(0));
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_NOTHROW(a.truncated(1) * b.truncated(1));  // explicit re-truncation is fine
    CHECK_THROWS_AS(a.truncated(3 + 1), std::invalid_argument);
}

TEST_CASE("rebase_shifted examples") {
    // q2 = 8 + 2a rebased at shift 1: 6 + 2(a+1)
    CHECK(rebase_shifted(ipoly({8, 2}), Int(1)) == ipoly({6, 2}));
    // constants are fixed points
    CHECK(rebase_shifted(ipoly({5}), Int(1)) == ipoly({5}));
    // q3 = 44 + 24a + 2a^2: 22 + 20(a+1) + 2(a+1)^2
    CHECK(rebase_shifted(ipoly({44, 24, 2}), Int(1)) == ipoly({22, 20, 2}));

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> c(1 + trial % 7);
        for (auto& v : c) v = coeff(rng);
        IntPoly p = ipoly(std::move(c));
        CHECK(rebase_shifted(rebase_shifted(p, Int(3)), Int(-3)) == p);
        // sanity: evaluating the rebased coefficients at (x - shift) recovers p
        IntPoly r = rebase_shifted(p, Int(1));
        CHECK(r.eval(Int(4)) == p.eval(Int(3)));
    }
}

TEST_CASE("polynomial coefficient series compose") {
    // Q-like series with polynomial coefficients, composed at scalar series.
    PolySeries F("u", 2, IntPoly("a"));
    F.set_coeff(0, ipoly({1}));
    F.set_coeff(1, ipoly({2}));
    F.set_coeff(2, ipoly({8, 2}));
    // a := 1 - t, u := t: coefficient of t^2 is 8 + 2*1... minus the a-slope:
    // q2(1 - t) = 8 + 2(1 - t) = 10 - 2t, so u^2 contributes 10 at t^2.
    IntSeries a_arg = iseries({1, -1, 0});
    IntSeries u_arg = iseries({0, 1, 0});
    IntSeries composed = compose_bivariate(F, a_arg, u_arg);
    CHECK(composed.coeff(0) == 1);
    CHECK(composed.coeff(1) == 2);
    CHECK(composed.coeff(2) == 10);

    IntSeries not_valuated = iseries({1, 1, 0});
    CHECK_THROWS_AS(compose_bivariate(F, a_arg, not_valuated), std::invalid_argument);
}

TEST_CASE("biseries arithmetic, inverse, sqrt") {
    BiSeries<Rat> f("s", "t", 4, 4, Rat(0));
    f.at(0, 0) = 1;
    f.at(1, 0) = -2;
    f.at(0, 2) = 3;
    f.at(2, 1) = make_rat(1, 2);
    BiSeries<Rat> g = f.inverse();
    CHECK((f * g) == BiSeries<Rat>::one("s", "t", 4, 4, Rat(0)));
    BiSeries<Rat> sq = (f * f).sqrt();
    CHECK(sq == f);

    BiSeries<Rat> h = f;
    h.at(0, 0) = 0;
    CHECK_THROWS_AS(h.inverse(), std::domain_error);
}

TEST_CASE("integrality conversions") {
    RatSeries s("t", 2, Rat(0));
    s.set_coeff(0, Rat(1));
    s.set_coeff(1, make_rat(4, 2));
    CHECK(to_integral(s).coeff(1) == 2);
    s.set_coeff(2, make_rat(1, 3));
    CHECK_THROWS_AS(to_integral(s), std::domain_error);
}
