#include <random>

#include "helpers.hpp"
#include "pushpull/demazure.hpp"
#include "pushpull/gkm.hpp"

using namespace pushpull;

TEST_CASE("operator matrices agree with right multiplication") {
  for (auto fgl : {FormalGroupLaw::additive(Ring::integers(), 5),
                   FormalGroupLaw::multiplicative(Ring::integers(), 1, 5)}) {
    auto q = testing::qw("A2", "ad", fgl);
    GKMModel gkm(q);
    for (int i = 0; i < 2; ++i) CHECK(matrix_equal(gkm.hecke_matrix(i), gkm.element_matrix(q->y(i))));
    std::mt19937_64 rng(2);
    for (int k = 0; k < 3; ++k) {
      Series u = random_element(q->fga(), rng, 2);
      CHECK(matrix_equal(gkm.mult_matrix(u), gkm.element_matrix(q->scalar(u))));
    }
  }
}

TEST_CASE("matrices compose like the elements") {
  auto q = testing::qw("B2", "sc", FormalGroupLaw::hyperbolic(Ring::integers(), 1, 2, 6));
  GKMModel gkm(q);
  QWElement a = q->y(0);
  QWElement b = q->mul(q->y(1), q->scalar(q->fga().variable(0)));
  CHECK(matrix_equal(gkm.element_matrix(q->mul(a, b)),
                     matrix_mul(gkm.element_matrix(a), gkm.element_matrix(b))));
}

TEST_CASE("Schubert dual basis pairs to the identity") {
  auto q = testing::qw("A2", "sc", FormalGroupLaw::additive(Ring::integers(), 5));
  GKMModel gkm(q);
  const auto& zeta = gkm.schubert_dual_basis();
  for (std::size_t w = 0; w < gkm.size(); ++w) {
    for (std::size_t u = 0; u < gkm.size(); ++u) {
      Series v = q->to_series(gkm.pair(zeta[w], q->y_basis(static_cast<int>(u))));
      CHECK(v.agrees_with(q->fga().constant(w == u ? 1 : 0)));
    }
  }
}

TEST_CASE("coordinates invert from_coordinates") {
  auto q = testing::qw("A2", "sc", FormalGroupLaw::additive(Ring::integers(), 5));
  GKMModel gkm(q);
  std::vector<Series> c;
  for (std::size_t w = 0; w < gkm.size(); ++w) c.push_back(q->fga().constant(static_cast<Scalar>(w) - 2));
  auto back = gkm.coordinates(gkm.from_coordinates(c));
  for (std::size_t w = 0; w < c.size(); ++w) CHECK(back[w].agrees_with(c[w]));
}
