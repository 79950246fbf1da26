#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace pushpull {

using Weight = std::vector<int>;      // coordinates in the lattice basis omega_1..omega_n
using IntMatrix = std::vector<std::vector<int>>;

struct CartanType {
  char letter = 'A';
  int rank = 1;

  /// Accepts "A2", "F4", or a bare letter combined with `rank`.
  static CartanType parse(const std::string& text, int rank = 0);
  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// C[i][k] = <alpha_i, alpha_k^vee>, Bourbaki numbering.
IntMatrix cartan_matrix(CartanType type);
/// Degrees of the basic invariants; their product is |W|.
std::vector<int> weyl_degrees(CartanType type);
std::size_t weyl_order(CartanType type);

struct LatticeSpec {
  enum class Kind { SimplyConnected, Adjoint, Pairing };
  Kind kind = Kind::SimplyConnected;
  IntMatrix pairing;  // P[j][i] = <omega_j, alpha_i^vee>, only for Kind::Pairing

  static LatticeSpec simply_connected() { return {}; }
  static LatticeSpec adjoint() { return {Kind::Adjoint, {}}; }
  static LatticeSpec from_pairing(IntMatrix p) { return {Kind::Pairing, std::move(p)}; }
  /// "sc", "ad", or a path to {"pairing": [[...], ...]}.
  static LatticeSpec parse(const std::string& text);
};

class RootDatum {
 public:
  static RootDatum create(CartanType type, const LatticeSpec& lattice);

  CartanType type() const { return type_; }
  int rank() const { return type_.rank; }
  std::string lattice_name() const { return lattice_name_; }
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& pairing() const { return pairing_; }
  const Weight& simple_root(int i) const { return simple_[i]; }
  int coxeter(int i, int j) const { return coxeter_[i][j]; }
  const IntMatrix& coxeter_matrix() const { return coxeter_; }

  /// Positive roots in lattice coordinates, sorted by height then
  /// lexicographically in simple-root coordinates; simple roots come first.
  const std::vector<Weight>& positive_roots() const { return roots_; }
  const std::vector<Weight>& positive_roots_simple_coords() const { return roots_alpha_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  /// Index of a positive root, or -1.
  int root_index(const Weight& beta) const;

  /// <lambda, alpha_i^vee>
  int pair(const Weight& lambda, int i) const;
  Weight reflect(int i, const Weight& lambda) const;
  Weight basis_weight(int j) const;

  nlohmann::json to_json() const;

 private:
  CartanType type_;
  std::string lattice_name_;
  IntMatrix cartan_;
  IntMatrix pairing_;
  std::vector<Weight> simple_;
  IntMatrix coxeter_;
  std::vector<Weight> roots_;
  std::vector<Weight> roots_alpha_;
  std::map<Weight, int> root_lookup_;
};

/// The Weyl group as an explicit list of elements. Index 0 is the identity,
/// elements are ordered by length and then by canonical word, so the last
/// element is the longest one.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 51840;

  explicit WeylGroup(const RootDatum& datum, std::size_t cap = kDefaultCap);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return words_.size(); }
  int rank() const { return rank_; }
  int identity() const { return 0; }
  int longest() const { return static_cast<int>(size()) - 1; }
  int max_length() const { return length_.back(); }

  int length(int w) const { return length_[w]; }
  /// Lexicographically least reduced word, letters 0-based.
  const std::vector<int>& word(int w) const { return words_[w]; }
  /// Row-major n x n action on lattice coordinates.
  const std::vector<int>& matrix(int w) const { return matrices_[w]; }
  int right(int w, int i) const { return right_[w * rank_ + i]; }   // w s_i
  int left(int w, int i) const { return left_[w * rank_ + i]; }     // s_i w
  bool right_descent(int w, int i) const { return length_[right(w, i)] < length_[w]; }
  int mul(int a, int b) const;
  int inverse(int w) const { return inverse_[w]; }
  int from_word(const std::vector<int>& word) const;
  int find_matrix(const std::vector<int>& m) const;

  Weight act(int w, const Weight& lambda) const;
  /// w(beta_r) as a signed root: r'+1 if positive root r', -(r'+1) if negative.
  int root_image(int w, int r) const { return root_image_[w * nroots_ + r]; }
  /// Reflection s_beta for positive root r.
  int reflection(int r) const { return reflection_[r]; }
  /// <omega_j, beta_r^vee> for j = 0..n-1.
  const std::vector<int>& coroot(int r) const { return coroots_[r]; }
  int pair_coroot(const Weight& lambda, int r) const;

  /// u <= w in Bruhat order, via the lifting property along a reduced word.
  bool bruhat_le(int u, int w) const;
  /// All reduced words of w in lexicographic order (at most `limit`).
  std::vector<std::vector<int>> reduced_words(int w, std::size_t limit = 100000) const;
  /// Coefficients of sum_w t^{l(w)}.
  std::vector<long long> poincare() const;
  std::string word_string(int w) const;

 private:
  RootDatum datum_;
  int rank_;
  std::size_t nroots_;
  std::vector<std::vector<int>> words_;
  std::vector<int> length_;
  std::vector<std::vector<int>> matrices_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> right_, left_, inverse_;
  std::vector<int> root_image_;
  std::vector<int> reflection_;
  std::vector<std::vector<int>> coroots_;
};

/// Coefficients of prod_i (1 + t + ... + t^{d_i - 1}).
std::vector<long long> degree_poincare(CartanType type);

}  // namespace pushpull
