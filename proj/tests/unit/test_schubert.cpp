#include "helpers.hpp"
#include "pushpull/schubert.hpp"

using namespace pushpull;

TEST_CASE("combinatorial and GKM models agree") {
  for (auto [type, lattice] : {std::pair{"A3", "ad"}, {"A3", "sc"}, {"B2", "ad"}, {"G2", "sc"}}) {
    auto w = testing::weyl(type, lattice);
    auto comb = SchubertModel::build(w, SchubertModel::Source::Combinatorial);
    auto gkm = SchubertModel::build(w, SchubertModel::Source::GKM);
    CHECK_FALSE(comb.from_gkm());
    CHECK(gkm.from_gkm());
    for (int i = 0; i < w->rank(); ++i) {
      CHECK(comb.A(i) == gkm.A(i));
      CHECK(comb.M(i) == gkm.M(i));
    }
  }
}

TEST_CASE("GKM source respects the cap") {
  auto w = testing::weyl("B3");
  CHECK(testing::error_of([&] { SchubertModel::build(w, SchubertModel::Source::GKM, 24); }) ==
        ErrorCode::GroupTooLarge);
  CHECK_FALSE(SchubertModel::build(w).from_gkm());
}

TEST_CASE("push-pull operators square to zero and satisfy braid relations") {
  auto w = testing::weyl("C3");
  auto m = SchubertModel::build(w);
  for (int i = 0; i < 3; ++i) CHECK(m.A(i).compose(m.A(i)) == SparseOp::zero(m.size()));
  // A_1 A_2 A_1 A_2 = A_2 A_1 A_2 A_1 for the double bond
  auto a = m.A(1).compose(m.A(2)).compose(m.A(1)).compose(m.A(2));
  auto b = m.A(2).compose(m.A(1)).compose(m.A(2)).compose(m.A(1));
  CHECK(a == b);
}

TEST_CASE("the longest word takes the point class to the fundamental class") {
  auto w = testing::weyl("B3");
  auto m = SchubertModel::build(w);
  auto op = m.push_pull_word(w->longest());
  auto col = op.cols[w->longest()];
  REQUIRE(col.size() == 1);
  CHECK(col[0] == std::pair<int, Scalar>{w->identity(), 1});
}

TEST_CASE("Chevalley formula for divisors on A2") {
  auto w = testing::weyl("A2", "sc");
  auto m = SchubertModel::build(w, SchubertModel::Source::Combinatorial);
  // x_{omega_1} sigma_e = -sigma_{s_1} up to the sign convention of x
  auto d = m.M(0).dense();
  const int s1 = w->from_word({0});
  const int s2 = w->from_word({1});
  CHECK(std::abs(d[s1][w->identity()]) == 1);
  CHECK(d[s2][w->identity()] == 0);
}

TEST_CASE("Schubert multiplication on A2") {
  auto w = testing::weyl("A2", "sc");
  auto m = SchubertModel::build(w, SchubertModel::Source::GKM);
  const int s1 = w->from_word({0});
  const int s2 = w->from_word({1});
  auto d = m.schubert_multiplication(s1).dense();
  // sigma_{s1}^2 = sigma_{s2 s1}, sigma_{s1} sigma_{s2} = sigma_{s1 s2} + sigma_{s2 s1}
  const int s12 = w->from_word({0, 1});
  const int s21 = w->from_word({1, 0});
  int sq = 0, mixed = 0;
  for (int v : {s12, s21}) {
    sq += static_cast<int>(d[v][s1]);
    mixed += static_cast<int>(d[v][s2]);
  }
  CHECK(sq == 1);
  CHECK(mixed == 2);
  auto e = m.schubert_multiplication(w->identity()).dense();
  for (int u = 0; u < 6; ++u) {
    for (int v = 0; v < 6; ++v) CHECK(e[u][v] == (u == v ? 1 : 0));
  }
}

TEST_CASE("characteristic image dimensions") {
  fp::Field f3{3};
  auto ad = SchubertModel::build(testing::weyl("A2", "ad"));
  auto sc = SchubertModel::build(testing::weyl("A2", "sc"));
  CHECK(sc.characteristic_image_dims(f3) == std::vector<long long>{1, 2, 2, 1});
  CHECK(ad.characteristic_image_dims(f3) == std::vector<long long>{1, 1, 0, 0});
  CHECK(ad.dims() == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("graded blocks") {
  auto m = SchubertModel::build(testing::weyl("B2"));
  CHECK(m.block(0) == std::vector<int>{0});
  CHECK(m.block(1).size() == 2);
  fp::Field f{2};
  auto blk = m.block_matrix(m.A(0), 2, -1, f);
  CHECK(blk.rows == 2);
  CHECK(blk.cols == 2);
}
