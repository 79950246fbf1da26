#include <random>

#include "helpers.hpp"
#include "pushpull/demazure.hpp"
#include "pushpull/fga.hpp"

using namespace pushpull;

TEST_CASE("additive law: x is linear and divided differences are pairings") {
  auto w = testing::weyl("B2", "sc");
  FGAContext fga(w, FormalGroupLaw::additive(Ring::integers(), 6));
  const auto& d = w->datum();
  Weight lam{3, -2};
  CHECK(fga.x(lam) == fga.variable(0).scaled(3) - fga.variable(1).scaled(2));
  for (int i = 0; i < 2; ++i) {
    CHECK(fga.divided_difference(i, fga.x(lam)) == fga.constant(-d.pair(lam, i)));
    CHECK(fga.weyl_act(w->from_word({i}), fga.x(lam)) == fga.x(d.reflect(i, lam)));
  }
}

TEST_CASE("x of a sum is the formal sum") {
  auto w = testing::weyl("A2", "sc");
  FGAContext fga(w, FormalGroupLaw::multiplicative(Ring::integers(), 1, 6));
  const auto& F = fga.fgl();
  Weight a{1, 1}, b{2, -1};
  Weight ab{3, 0};
  Series lhs = fga.x(ab);
  Series rhs = F.formal_sum(fga.x(a), fga.x(b));
  CHECK(lhs.agrees_with(rhs));
  CHECK(fga.x_root(0, true).agrees_with(fga.x_root(0) * fga.root_unit(0)));
  CHECK((fga.root_unit(0) * fga.root_unit_inverse(0)).agrees_with(fga.constant(1)));
}

TEST_CASE("twisted Leibniz rule and s_i-invariants") {
  auto w = testing::weyl("G2", "sc");
  for (auto fgl : {FormalGroupLaw::multiplicative(Ring::integers(), 1, 8),
                   FormalGroupLaw::hyperbolic(Ring::integers(), 1, 2, 8)}) {
    FGAContext fga(w, fgl);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
      Series u = random_element(fga, rng, 2);
      Series v = random_element(fga, rng, 2);
      for (int i = 0; i < 2; ++i) {
        const int si = w->from_word({i});
        Series lhs = fga.divided_difference(i, u * v);
        Series rhs = fga.divided_difference(i, u) * v + fga.weyl_act(si, u) * fga.divided_difference(i, v);
        CHECK(lhs.agrees_with(rhs));
        Series inv = u + fga.weyl_act(si, u);
        CHECK(fga.divided_difference(i, inv * v).agrees_with(inv * fga.divided_difference(i, v)));
        Series sym = u * fga.weyl_act(si, u);
        CHECK(fga.divided_difference(i, sym).agrees_with(fga.zero()));
      }
    }
  }
}

TEST_CASE("kappa by the correction term and by division agree") {
  auto w = testing::weyl("A2", "ad");
  FGAContext fga(w, FormalGroupLaw::hyperbolic(Ring::integers(), 1, 2, 7));
  for (int i = 0; i < 2; ++i) CHECK(fga.kappa(i).agrees_with(fga.kappa_by_division(i)));
  FGAContext add(w, FormalGroupLaw::additive(Ring::integers(), 5));
  CHECK(add.kappa(0).is_zero());
}
