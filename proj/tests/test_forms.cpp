#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "primdiv/forms.hpp"
#include "primdiv/zpoly.hpp"

using namespace primdiv;

TEST_CASE("cyclotomic polynomials") {
  CHECK(poly::cyclotomic(1) == ZPoly{-1, 1});
  CHECK(poly::cyclotomic(7) == ZPoly{1, 1, 1, 1, 1, 1, 1});
  CHECK(poly::cyclotomic(12) == ZPoly{1, 0, -1, 0, 1});
  // phi_105 famously has a coefficient of -2
  ZPoly c105 = poly::cyclotomic(105);
  bool has_minus2 = false;
  for (const auto& c : c105) has_minus2 = has_minus2 || c == -2;
  CHECK(has_minus2);
  CHECK(poly::degree(c105) == 48);
}

TEST_CASE("build_form matches the displayed forms") {
  CHECK(build_form(5).dump_line() == "5 2 1 1 -1");
  CHECK(build_form(7).dump_line() == "7 3 1 1 -2 -1");
  CHECK(build_form(9).dump_line() == "9 3 1 0 -3 1");
  CHECK(build_form(11).dump_line() == "11 5 1 1 -4 -3 3 1");
  // The quadratic form for n = 12 is X^2 - 3Y^2: its roots must be
  // 2cos(2pi/12) = +-sqrt(3), and (-3,2), (-26,15) must solve k = -3, 1.
  CHECK(build_form(12).dump_line() == "12 2 1 0 -3");
  CHECK(build_form(12).evaluate(-3, 2) == -3);
  CHECK(build_form(12).evaluate(-26, 15) == 1);
  CHECK(build_form(13).dump_line() == "13 6 1 1 -5 -4 6 3 -1");
  CHECK(build_form(15).dump_line() == "15 4 1 -1 -4 4 1");
  CHECK(build_form(16).dump_line() == "16 4 1 0 -4 0 2");
  CHECK(build_form(17).dump_line() == "17 8 1 1 -7 -6 15 10 -10 -4 1");
  CHECK(build_form(19).dump_line() == "19 9 1 1 -8 -7 21 15 -20 -10 5 1");
  CHECK(build_form(20).dump_line() == "20 4 1 0 -5 0 5");
  CHECK(build_form(21).dump_line() == "21 6 1 -1 -6 6 8 -8 1");
  CHECK(build_form(23).dump_line() == "23 11 1 1 -10 -9 36 28 -56 -35 35 15 -6 -1");
  CHECK(build_form(24).dump_line() == "24 4 1 0 -4 0 1");
  CHECK(build_form(25).dump_line() == "25 10 1 0 -10 0 35 1 -50 -5 25 5 -1");
  CHECK(build_form(29).dump_line() ==
        "29 14 1 1 -13 -12 66 55 -165 -120 210 126 -126 -56 28 7 -1");
}

TEST_CASE("build_form rejects excluded indices") {
  CHECK_THROWS_AS(build_form(4), std::invalid_argument);
  CHECK_THROWS_AS(build_form(6), std::invalid_argument);
  CHECK_THROWS_AS(build_form(1), std::invalid_argument);
}

TEST_CASE("evaluate, exact") {
  BinaryForm f7 = build_form(7);
  CHECK(f7.evaluate(1, 0) == 1);
  CHECK(f7.evaluate(-1, 2) == 1);  // -1 + 2 + 8 - 8
  BinaryForm f5 = build_form(5);
  CHECK(f5.evaluate(-5, 3) == 1);  // 25 - 15 - 9
}

TEST_CASE("degree and leading coefficient for every n in scope") {
  for (long n = 5; n <= 30; ++n) {
    if (n == 6) continue;
    BinaryForm f = build_form(n);
    CHECK(f.degree == poly::euler_phi(n) / 2);
    CHECK(f.evaluate(1, 0) == 1);
  }
}

TEST_CASE("numerical factorization: g vanishes at 2cos(2pi j/n)") {
  long prec = 60;
  for (long n : {7L, 12L, 16L, 23L, 29L, 101L}) {
    if (n == 6) continue;
    ZPoly g = build_form(n).univariate();
    BigFloat tol = BigFloat(10.0, 64).pow_si(-(prec - 10));
    for (long j : poly::coprime_residues_below_half(n)) {
      BigFloat xi = BigFloat::two_cos_2pi(j, n, BigFloat::digits_to_bits(prec));
      CHECK(poly::eval(g, xi).abs() < tol);
    }
  }
}

TEST_CASE("reduce_even identity F_2t(X,Y) = F_t(X,-Y)") {
  BinaryForm f14 = reduce_even(7);
  CHECK(f14.n == 14);
  CHECK(f14.coeffs == std::vector<mpz_class>{1, -1, -2, 1});
  CHECK_THROWS_AS(reduce_even(8), std::invalid_argument);
  CHECK_THROWS_AS(reduce_even(1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_even(3), std::invalid_argument);

  for (long t : {5L, 7L, 9L, 11L, 13L, 15L}) {
    BinaryForm ft = build_form(t);
    BinaryForm f2t = reduce_even(t);
    for (long x = -20; x <= 20; ++x)
      for (long y = -20; y <= 20; ++y)
        CHECK(f2t.evaluate(x, y) == ft.evaluate(x, -y));
  }
}

TEST_CASE("reduce_to_core table and composition identity") {
  CHECK(reduce_to_core(18).m == 9);
  CHECK(reduce_to_core(27).m == 9);
  CHECK(reduce_to_core(28).m == 14);
  CHECK(reduce_to_core(14).m == 7);
  CHECK(reduce_to_core(22).m == 11);
  CHECK(reduce_to_core(26).m == 13);
  CHECK(reduce_to_core(30).m == 15);
  CHECK_THROWS_AS(reduce_to_core(7), std::invalid_argument);

  for (long n : {14L, 18L, 22L, 26L, 27L, 28L, 30L}) {
    CoreReduction cr = reduce_to_core(n);
    BinaryForm fn = build_form(n);
    BinaryForm fm = build_form(cr.m);
    for (long x = -10; x <= 10; ++x)
      for (long y = -10; y <= 10; ++y) {
        mpz_class xs = cr.x_image(x, y), ys = cr.y_image(x, y);
        CHECK(fn.evaluate(x, y) == fm.evaluate(xs, ys));
      }
  }
}

TEST_CASE("form targets") {
  FormTarget t7 = form_target(7);
  CHECK(t7.contains(7));
  CHECK(t7.contains(-1));
  CHECK(!t7.contains(3));
  FormTarget t12 = form_target(12);
  for (long k : {1L, -1L, 2L, -2L, 3L, -3L, 6L, -6L}) CHECK(t12.contains(k));
  CHECK(!t12.contains(4));
  CHECK(form_target(9).contains(3));
  CHECK(form_target(30).contains(5));   // P(30/3) = P(10) = 5
  CHECK(form_target(28).contains(7));   // P(28) = 7
}
