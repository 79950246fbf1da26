#include "helpers.hpp"
#include "pushpull/fgl.hpp"

using namespace pushpull;

namespace {

void check_axioms(const FormalGroupLaw& F) {
  F.validate();
  const int d = F.trunc();
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) CHECK(F.coeff(i, j) == F.coeff(j, i));
  }
  CHECK(F.coeff(1, 0) == 1);
  CHECK(F.coeff(0, 0) == 0);
  for (int i = 2; i <= d; ++i) CHECK(F.coeff(i, 0) == 0);
  Series x = Series::variable(F.ring(), 1, 0);
  CHECK(F.formal_sum(x, F.inverse_series()).truncated(d).is_zero());
  CHECK(F.inverse_cofactor().constant_term() == F.ring().normalize(-1));
}

}  // namespace

TEST_CASE("standard laws satisfy the axioms") {
  Ring z = Ring::integers();
  check_axioms(FormalGroupLaw::additive(z, 6));
  check_axioms(FormalGroupLaw::multiplicative(z, 1, 6));
  check_axioms(FormalGroupLaw::multiplicative(z, -2, 6));
  check_axioms(FormalGroupLaw::hyperbolic(z, 1, 2, 7));
  check_axioms(FormalGroupLaw::hyperbolic(Ring::prime_field(5), 3, 1, 6));
}

TEST_CASE("multiplicative law is u + v - beta uv") {
  auto F = FormalGroupLaw::multiplicative(Ring::integers(), 3, 5);
  CHECK(F.coeff(1, 1) == -3);
  CHECK(F.coeff(2, 1) == 0);
  CHECK(F.correction().constant_term() == -3);
  CHECK(F.graded_exact() == false);
  CHECK(FormalGroupLaw::additive(Ring::integers(), 5).graded_exact());
}

TEST_CASE("hyperbolic law coefficients") {
  // (u + v - mu1 uv) / (1 + mu2 uv)
  auto F = FormalGroupLaw::hyperbolic(Ring::integers(), 1, 2, 6);
  CHECK(F.coeff(1, 1) == -1);
  CHECK(F.coeff(2, 1) == -2);
  CHECK(F.coeff(2, 2) == 2);
  CHECK(F.coeff(3, 2) == 4);
}

TEST_CASE("custom tables are validated") {
  Ring z = Ring::integers();
  auto ok = FormalGroupLaw::custom(z, 4, {{1, 0, 1}, {0, 1, 1}, {1, 1, 5}});
  CHECK(ok.coeff(1, 1) == 5);
  CHECK(testing::error_of([&] { FormalGroupLaw::custom(z, 4, {{1, 0, 1}, {0, 1, 1}, {2, 1, 1}}); }) ==
        ErrorCode::FGLAxiomViolation);
  CHECK(testing::error_of([&] { FormalGroupLaw::custom(z, 4, {{1, 0, 1}, {0, 1, 2}}); }) ==
        ErrorCode::FGLAxiomViolation);
  // associativity fails for u + v + uv^2 + u^2 v without further terms
  CHECK(testing::error_of([&] {
          FormalGroupLaw::custom(z, 4, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1}});
        }) == ErrorCode::FGLAxiomViolation);
}

TEST_CASE("json round trip") {
  auto F = FormalGroupLaw::multiplicative(Ring::integers(), 2, 5);
  auto G = FormalGroupLaw::from_json(Ring::integers(), F.to_json());
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; i + j <= 5; ++j) CHECK(F.coeff(i, j) == G.coeff(i, j));
  }
}
