#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "pushpull/fp.hpp"
#include "pushpull/gkm.hpp"
#include "pushpull/rootdata.hpp"

namespace pushpull {

/// Integer operator on CH(G/B) in the Schubert basis, stored by columns:
/// cols[u] lists (w, c) with image(sigma_u) = sum c sigma_w.
struct SparseOp {
  std::vector<std::vector<std::pair<int, Scalar>>> cols;

  static SparseOp zero(std::size_t n) { return {std::vector<std::vector<std::pair<int, Scalar>>>(n)}; }
  std::size_t size() const { return cols.size(); }
  std::vector<std::vector<Scalar>> dense() const;
  SparseOp compose(const SparseOp& right) const;  // this * right
  friend bool operator==(const SparseOp&, const SparseOp&) = default;
};

/// Non-equivariant Chow ring of G/B with Schubert basis sigma_w (degree l(w)),
/// the push-pull operators A_i and multiplications M_j by x of the lattice
/// basis weights.
class SchubertModel {
 public:
  enum class Source { Auto, Combinatorial, GKM };

  static constexpr std::size_t kDefaultGKMCap = 24;

  static SchubertModel build(std::shared_ptr<const WeylGroup> weyl, Source source = Source::Auto,
                             std::size_t gkm_cap = kDefaultGKMCap);

  const WeylGroup& weyl() const { return *weyl_; }
  std::shared_ptr<const WeylGroup> weyl_ptr() const { return weyl_; }
  std::size_t size() const { return weyl_->size(); }
  int rank() const { return weyl_->rank(); }
  bool from_gkm() const { return gkm_ != nullptr; }
  int degree(int w) const { return weyl_->length(w); }
  int top_degree() const { return weyl_->max_length(); }

  const SparseOp& A(int i) const { return a_[i]; }
  const SparseOp& M(int j) const { return m_[j]; }

  /// Elements of degree d in increasing index order, and the position of w
  /// inside its degree block.
  const std::vector<int>& block(int d) const { return blocks_[d]; }
  int block_position(int w) const { return position_[w]; }
  std::vector<int> dims() const;

  /// Multiplication by sigma_u, from equivariant Schubert classes. Needs the
  /// GKM model (|W| within the cap given at build time).
  SparseOp schubert_multiplication(int u) const;

  /// A_{I_w} = A_{i_1} ... A_{i_l} along the canonical word of w.
  SparseOp push_pull_word(int w) const;

  /// The restriction to the degree d block of an operator of degree `shift`
  /// (dims: block(d+shift) x block(d)), reduced mod p.
  fp::Matrix block_matrix(const SparseOp& op, int d, int shift, const fp::Field& f) const;

  /// dim of the image of the characteristic map in CH^j(G/B; F_p), per j.
  std::vector<long long> characteristic_image_dims(const fp::Field& f) const;

 private:
  SchubertModel() = default;
  void build_blocks();
  void build_combinatorial();
  void build_gkm();

  std::shared_ptr<const WeylGroup> weyl_;
  std::shared_ptr<const GKMModel> gkm_;
  std::vector<SparseOp> a_;
  std::vector<SparseOp> m_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> position_;
};

}  // namespace pushpull
