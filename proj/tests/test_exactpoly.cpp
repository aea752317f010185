// Exact integer-polynomial arithmetic and Sturm-chain root isolation.
// Root-location oracles come from polynomials whose roots are known in closed
// form (integers, square roots, cosines), independent of the implementation.

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rhomin/intpoly.hpp"
#include "rhomin/roots.hpp"

using namespace rhomin;

namespace {
const IntPoly xm1({-1, 1});  // x - 1
const IntPoly xm2({-2, 1});  // x - 2
const IntPoly xm3({-3, 1});  // x - 3
}  // namespace

TEST_CASE("construction, degree, trim") {
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly().is_zero());
    CHECK(IntPoly({0, 0, 0}).is_zero());  // trailing zeros trimmed
    IntPoly p({-2, -3, 0, 1});
    CHECK(p.degree() == 3);
    CHECK(p.coeff(0) == -2);
    CHECK(p.coeff(3) == 1);
    CHECK(p.coeff(7) == 0);  // beyond degree reads as zero
    CHECK(p.leading() == 1);
    CHECK(IntPoly::x() == IntPoly({0, 1}));
    CHECK(IntPoly::constant(5) == IntPoly({5}));
    CHECK(IntPoly::monomial(3, 2) == IntPoly({0, 0, 0, 2}));
}

TEST_CASE("ring arithmetic") {
    IntPoly a({1, 2});       // 1 + 2x
    IntPoly b({0, 0, 3});    // 3x^2
    CHECK((a + b) == IntPoly({1, 2, 3}));
    CHECK((a - a).is_zero());
    CHECK((-a) == IntPoly({-1, -2}));
    CHECK((a * b) == IntPoly({0, 0, 3, 6}));
    CHECK((xm1 * IntPoly({1, 1})) == IntPoly({-1, 0, 1}));  // (x-1)(x+1) = x^2-1
    CHECK((a * mpz_class(2)) == IntPoly({2, 4}));
    CHECK((a * IntPoly()).is_zero());
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    CHECK((xm1 * xm2 * xm3) == IntPoly({-6, 11, -6, 1}));
}

TEST_CASE("derivative, content, primitive part") {
    CHECK(IntPoly({-6, 11, -6, 1}).derivative() == IntPoly({11, -12, 3}));
    CHECK(IntPoly({5}).derivative().is_zero());
    CHECK(IntPoly({6, -9, 12}).content() == 3);
    CHECK(IntPoly({-6, -9}).content() == 3);
    CHECK(IntPoly({6, -9, 12}).primitive_part() == IntPoly({2, -3, 4}));
    // Sign of the leading coefficient preserved.
    CHECK(IntPoly({6, -12}).primitive_part() == IntPoly({1, -2}));
}

TEST_CASE("evaluation: rational, sign, floating") {
    IntPoly p({-2, 0, 1});  // x^2 - 2
    CHECK(p.eval(mpq_class(3, 2)) == mpq_class(1, 4));
    CHECK(p.sign_at(mpq_class(1)) == -1);
    CHECK(p.sign_at(mpq_class(2)) == 1);
    CHECK(p.sign_at(mpq_class(3, 2)) == 1);
    IntPoly q({0, -2, 0, 1});  // x^3 - 2x, root at sqrt(2)
    CHECK(q.sign_at(mpq_class(0)) == 0);
    CHECK(q.eval_double(1.0) == -1.0);
    CHECK(q.eval_long_double(2.0L) == 4.0L);
}

TEST_CASE("substitutions") {
    IntPoly p({1, 2, 3});  // 1 + 2x + 3x^2
    CHECK(p.substitute_x_squared() == IntPoly({1, 0, 2, 0, 3}));
    CHECK(p.times_monomial(2) == IntPoly({0, 0, 1, 2, 3}));
    CHECK(p.times_monomial(0) == p);
}

TEST_CASE("display forms") {
    CHECK(IntPoly({-2, -3, 0, 1}).to_string() == "x^3 - 3*x - 2");
    CHECK(IntPoly({0, -2, 0, 1}).coeff_strings() ==
          std::vector<std::string>{"0", "-2", "0", "1"});
}

TEST_CASE("gcd, exact division, squarefree part") {
    CHECK(poly_gcd(xm1 * xm2, xm1 * xm3) == xm1);
    CHECK(poly_gcd(xm1 * xm1 * xm2, xm1 * xm2) == xm1 * xm2);
    // Primitive with positive leading coefficient.
    CHECK(poly_gcd(-(xm1 * xm1), xm1 * mpz_class(3)) == xm1);

    CHECK(exact_div(xm1 * xm2, xm2) == xm1);
    CHECK_THROWS_AS(exact_div(xm1 * xm2 + IntPoly({1}), xm2), std::invalid_argument);

    CHECK(squarefree_part(xm1 * xm1 * IntPoly({2, 1})) == IntPoly({-2, 1, 1}));
    CHECK(squarefree_part(xm2 * xm2 * xm2) == xm2);
}

TEST_CASE("Sturm chain counts roots in half-open intervals") {
    SturmChain c(IntPoly({-2, 0, 1}));  // roots +-sqrt(2)
    CHECK(c.count_all() == 2);
    CHECK(c.count(1, 2) == 1);
    CHECK(c.count(-2, -1) == 1);
    CHECK(c.count(-1, 1) == 0);
    CHECK(c.root_bound() == 3);  // 1 + ceil(2/1)
    CHECK(c.count(-c.root_bound(), c.root_bound()) == 2);

    // Multiplicities collapse: (x-1)^3 has one distinct root.
    SturmChain d(xm1 * xm1 * xm1);
    CHECK(d.count_all() == 1);
    // Half-open convention: a root at the lower endpoint is excluded,
    // at the upper endpoint included.
    CHECK(d.count(1, 2) == 0);
    CHECK(d.count(0, 1) == 1);

    // No real roots.
    CHECK(SturmChain(IntPoly({1, 0, 1})).count_all() == 0);
}

TEST_CASE("isolate_largest_root brackets the right root") {
    // Largest root of (x-1)(x-2)(x-3) is 3.
    RootInterval iv = isolate_largest_root(xm1 * xm2 * xm3, mpq_class(1, 1000000));
    CHECK(iv.lo < 3);
    CHECK(iv.hi >= 3);
    CHECK(iv.hi - iv.lo <= mpq_class(1, 1000000));

    // Default width is 10^-12.
    CHECK(default_root_width() == mpq_class(mpz_class(1), mpz_class("1000000000000")));
    RootInterval iv2 = isolate_largest_root(IntPoly({-2, 0, 1}));
    CHECK(iv2.hi - iv2.lo <= default_root_width());
    double mid = mpq_class(iv2.lo + iv2.hi).get_d() / 2;
    CHECK(std::abs(mid - std::sqrt(2.0)) < 1e-11);

    // Refinement keeps the invariant and shrinks further.
    SturmChain chain(iv2.poly);
    refine_root_interval(chain, iv2, mpq_class(1, mpz_class("10000000000000000")));
    CHECK(iv2.hi - iv2.lo <= mpq_class(1, mpz_class("10000000000000000")));
    CHECK(chain.count(iv2.lo, iv2.hi) == 1);

    CHECK_THROWS_AS(isolate_largest_root(IntPoly()), std::invalid_argument);
    CHECK_THROWS_AS(isolate_largest_root(IntPoly({1, 0, 1})), std::invalid_argument);
}

TEST_CASE("compare_largest_roots certifies order and equality") {
    CHECK(compare_largest_roots(IntPoly({-2, 0, 1}), IntPoly({-3, 0, 1})) == Ordering::Less);
    CHECK(compare_largest_roots(IntPoly({-3, 0, 1}), IntPoly({-2, 0, 1})) == Ordering::Greater);
    // Distinct polynomials sharing the top root: x^2-2 vs (x^2-2)^2.
    IntPoly s({-2, 0, 1});
    CHECK(compare_largest_roots(s, s * s) == Ordering::Equal);
    CHECK(compare_largest_roots(xm2, s) == Ordering::Greater);  // 2 > sqrt(2)
    // Roots closer than any floating tolerance, decided exactly:
    // sqrt(2) vs sqrt(2 + 10^-12).
    IntPoly t(std::vector<mpz_class>{mpz_class("-2000000000000001"), 0,
                                     mpz_class("1000000000000000")});
    CHECK(compare_largest_roots(s, t) == Ordering::Less);
    CHECK(compare_largest_roots(t, s) == Ordering::Greater);
}
