#include <random>

#include "helpers.hpp"
#include "pushpull/series.hpp"

using namespace pushpull;

TEST_CASE("ring arithmetic") {
  Ring z = Ring::integers();
  Ring z6 = Ring::integers_mod(6);
  Ring f7 = Ring::prime_field(7);
  CHECK(z6.normalize(-1) == 5);
  CHECK(z6.is_unit(5));
  CHECK_FALSE(z6.is_unit(3));
  CHECK(testing::error_of([&] { z6.inverse(2); }) == ErrorCode::NotAUnit);
  CHECK(f7.mul(f7.inverse(3), 3) == 1);
  CHECK(z.exact_div(-12, 4) == -3);
  CHECK(testing::error_of([&] { z.exact_div(7, 2); }) == ErrorCode::NotDivisible);
  CHECK(testing::error_of([&] { z.mul(Scalar{1} << 62, 4); }) == ErrorCode::Overflow);
  CHECK(z6.exact_div(4, 5) == 2);
}

TEST_CASE("monomial packing") {
  int e[] = {2, 0, 1};
  Monomial m = Monomial::from_exponents(e);
  CHECK(m.degree() == 3);
  CHECK(m.exponent(0) == 2);
  CHECK(m.exponent(2) == 1);
  CHECK(Monomial::variable(2).divides(m));
  CHECK_FALSE(Monomial::variable(1).divides(m));
  CHECK((m / Monomial::variable(0)).exponent(0) == 1);
}

TEST_CASE("series products and truncation") {
  Ring z = Ring::integers();
  Series x = Series::variable(z, 2, 0);
  Series y = Series::variable(z, 2, 1);
  Series one = Series::constant(z, 2, 1);
  Series s = (one + x) * (one - x);
  CHECK(s == one - x * x);
  Series t = (x + y).pow(3).truncated(2);
  CHECK(t.is_zero());
  CHECK(t.precision() == 2);
  Series u = (x + y).pow(2);
  CHECK(u.coeff(Monomial::variable(0) * Monomial::variable(1)) == 2);
  CHECK(u.valuation() == 2);
  CHECK(u.max_degree() == 2);
}

TEST_CASE("inverse of a unit series") {
  Ring z = Ring::integers();
  Series x = Series::variable(z, 1, 0);
  Series one = Series::constant(z, 1, 1);
  Series inv = invert_unit(one - x, 6);
  CHECK(((one - x) * inv).agrees_with(one));
  for (int k = 0; k <= 6; ++k) CHECK(inv.coeff(Monomial::variable(0, k)) == 1);
  CHECK(testing::error_of([&] { invert_unit(x + x, 4); }) != ErrorCode::Overflow);
}

TEST_CASE("exact division recovers random factors") {
  Ring z = Ring::integers();
  std::mt19937_64 rng(3);
  Series x = Series::variable(z, 2, 0);
  Series y = Series::variable(z, 2, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Series q = Series::constant(z, 2, 0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; i + j < 3; ++j) {
        Scalar c = static_cast<Scalar>(rng() % 7) - 3;
        q += x.pow(i) * y.pow(j) * Series::constant(z, 2, c);
      }
    }
    Series v = x - y * Series::constant(z, 2, 2);
    CHECK(exact_divide(q * v, v) == q);
  }
  CHECK(testing::error_of([&] { exact_divide(x + Series::constant(z, 2, 1), y); }) == ErrorCode::NotDivisible);
}

TEST_CASE("substitution") {
  Ring z = Ring::integers();
  Series x = Series::variable(z, 2, 0);
  Series y = Series::variable(z, 2, 1);
  Series f = x * x + y;
  Series images[] = {y, x};
  CHECK(f.substitute(images) == y * y + x);
}
