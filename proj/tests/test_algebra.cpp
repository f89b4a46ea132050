#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "concord/laurent.hpp"
#include "concord/plf.hpp"
#include "testutil.hpp"

using namespace concord;

namespace {

// hand-checked convolution oracle for the degree-32 cable polynomial
LaurentPoly t311_alexander() {
    return LaurentPoly::from_terms({{0, 1},   {1, -1},  {3, 1},   {4, -1},  {6, 1},
                                    {7, -1},  {9, 1},   {10, -1}, {11, 1},  {13, -1},
                                    {14, 1},  {16, -1}, {17, 1},  {19, -1}, {20, 1}});
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), BadParameters);
    CHECK_THROWS_AS(parse_rational("a/b"), BadParameters);
}

TEST_CASE("poly_mul basics") {
    const auto t = LaurentPoly::variable();
    const auto one = LaurentPoly::one();
    CHECK(poly_mul(t - one, t + one) == LaurentPoly::from_terms({{2, 1}, {0, -1}}));
    const auto p = LaurentPoly::from_terms({{-2, 3}, {0, -1}, {5, 7}});
    CHECK(poly_mul(p, one) == p);
    CHECK(poly_mul(p, LaurentPoly::zero()).is_zero());
}

TEST_CASE("poly_mul cable convolution") {
    const auto b = LaurentPoly::from_terms({{0, 1}, {3, -1}, {6, 1}, {9, -1}, {12, 1}});
    const auto product = poly_mul(b, t311_alexander());
    CHECK(product.min_exponent() == 0);
    CHECK(product.max_exponent() == 32);
    CHECK(product.coeff(0) == 1);
    CHECK(product.coeff(32) == 1);
    CHECK(product.term_count() == 15);
    // alternating +-1 coefficients
    int sign = 1;
    for (const auto& [e, c] : product.terms()) {
        CHECK(c == sign);
        sign = -sign;
    }
    const auto expected = LaurentPoly::from_terms(
        {{0, 1},   {1, -1},  {6, 1},   {7, -1},  {11, 1},  {13, -1}, {15, 1},  {16, -1},
         {17, 1},  {19, -1}, {21, 1},  {25, -1}, {26, 1},  {31, -1}, {32, 1}});
    CHECK(product == expected);
}

TEST_CASE("poly_divide_exact") {
    const auto t = LaurentPoly::variable();
    const auto one = LaurentPoly::one();
    CHECK(poly_divide_exact(LaurentPoly::from_terms({{2, 1}, {0, -1}}), t - one) == t + one);

    // torus quotient at (r,s) = (2,3)
    const auto num = poly_mul(LaurentPoly::from_terms({{6, 1}, {0, -1}}), t - one);
    const auto den = poly_mul(LaurentPoly::from_terms({{2, 1}, {0, -1}}),
                              LaurentPoly::from_terms({{3, 1}, {0, -1}}));
    CHECK(poly_divide_exact(num, den) == LaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}}));

    CHECK_THROWS_AS(poly_divide_exact(t - one, LaurentPoly::from_terms({{2, 1}, {0, -1}})),
                    NotDivisible);
}

TEST_CASE("symmetrize") {
    const auto p = LaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}});
    const auto s = p.symmetrize();
    CHECK(s == LaurentPoly::from_terms({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(s.symmetrized());

    const auto big = t311_alexander().symmetrize();
    CHECK(big.min_exponent() == -10);
    CHECK(big.max_exponent() == 10);

    CHECK_THROWS_AS(LaurentPoly::from_terms({{1, 1}, {0, -1}}).symmetrize(), OddSpan);
    CHECK_THROWS_AS(LaurentPoly::from_terms({{2, 1}, {1, 1}, {0, -1}}).symmetrize(),
                    NotPalindromic);
}

TEST_CASE("canonical unit representative") {
    const auto p = LaurentPoly::from_terms({{-3, -1}, {-2, 1}, {-1, -1}});
    const auto c = p.canonical_unit();
    CHECK(c.min_exponent() == 0);
    CHECK(c.coeff(c.max_exponent()) > 0);
    CHECK(c == LaurentPoly::from_terms({{0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("ring laws on random polynomials") {
    testing::Rng rng(20240817);
    for (int i = 0; i < 300; ++i) {
        const auto a = testing::random_poly(rng);
        const auto b = testing::random_poly(rng);
        const auto c = testing::random_poly(rng);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, b + c) == poly_mul(a, b) + poly_mul(a, c));
        if (!b.is_zero()) CHECK(poly_divide_exact(poly_mul(a, b), b) == a);
    }
}

TEST_CASE("symmetrize is balanced on random palindromes") {
    testing::Rng rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> width(0, 4);
    std::uniform_int_distribution<int> offset(-3, 3);
    for (int i = 0; i < 300; ++i) {
        // balanced palindrome around 0, then an even shift
        LaurentPoly pal = LaurentPoly::term(0, Integer(coeff(rng)));
        const int k = width(rng);
        for (int e = 1; e <= k; ++e) {
            const int c = coeff(rng);
            pal = pal + LaurentPoly::from_terms({{e, c}, {-e, c}});
        }
        if (pal.is_zero()) continue;
        pal = pal.shifted(2 * offset(rng));
        if (!pal.is_palindromic()) continue;  // leading/trailing cancellation can unbalance
        const auto s = pal.symmetrize();
        for (const auto& [e, c] : s.terms()) CHECK(s.coeff(-e) == c);
    }
}

TEST_CASE("plf_max basics") {
    const auto f = PLFunction::line(Rational(-1), Rational(0));   // -t
    const auto g = PLFunction::line(Rational(1), Rational(-2));   // -2+t
    const auto m = plf_max({f, g});
    CHECK(m.breakpoints().size() == 3);
    CHECK(m(Rational(1)) == Rational(-1));
    CHECK(m(Rational(0)) == Rational(0));
    CHECK(m(Rational(2)) == Rational(0));
    CHECK(plf_max({f}) == f);
}

TEST_CASE("trefoil staircase lines") {
    // even-index staircase lines of T(2,3): -t and -2+t
    const auto u = plf_max({PLFunction::line(Rational(-1), Rational(0)),
                            PLFunction::line(Rational(1), Rational(-2))});
    CHECK(u(Rational(1)) == Rational(-1));
    CHECK(u(make_rational(1, 2)) == make_rational(-1, 2));
}

TEST_CASE("plf add, negate, slopes") {
    const auto f = plf_max({PLFunction::line(Rational(-1), Rational(0)),
                            PLFunction::line(Rational(1), Rational(-2))});
    CHECK(plf_add(f, plf_negate(f)) == PLFunction());

    const auto line = PLFunction::line(Rational(-10), Rational(0));
    CHECK(plf_slope_at(line, make_rational(1, 2)) == Rational(-10));
    CHECK_FALSE(plf_slope_at(f, Rational(1)).has_value());  // breakpoint
    CHECK_THROWS_AS(plf_slope_at(f, Rational(2)), OutOfDomain);
    CHECK_THROWS_AS(f(Rational(3)), OutOfDomain);

    const auto slopes = plf_slopes_on(f, make_rational(1, 2), make_rational(3, 2));
    CHECK(slopes == std::set<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("plf canonical form drops collinear points") {
    auto f = PLFunction::from_points(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
    CHECK(f.breakpoints().size() == 2);
    CHECK(f == PLFunction::line(Rational(1), Rational(0)));
}

TEST_CASE("plf_max dominates and is attained, add is pointwise") {
    testing::Rng rng(99);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> num(0, 8);
    for (int i = 0; i < 200; ++i) {
        std::vector<PLFunction> fs;
        for (int k = 0; k < 3; ++k)
            fs.push_back(plf_max(PLFunction::line(Rational(coeff(rng)), Rational(coeff(rng))),
                                 PLFunction::line(Rational(coeff(rng)), Rational(coeff(rng)))));
        const auto m = plf_max(fs);
        const auto g = plf_add(fs[0], plf_negate(fs[1]));
        for (int k = 0; k < 5; ++k) {
            const Rational t = make_rational(num(rng), 4);
            bool attained = false;
            for (const auto& f : fs) {
                CHECK(m(t) >= f(t));
                attained = attained || m(t) == f(t);
            }
            CHECK(attained);
            CHECK(g(t) == fs[0](t) - fs[1](t));
        }
    }
}
