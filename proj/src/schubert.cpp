#include "pushpull/schubert.hpp"

#include <map>

namespace pushpull {

std::vector<std::vector<Scalar>> SparseOp::dense() const {
  std::vector<std::vector<Scalar>> m(size(), std::vector<Scalar>(size(), 0));
  for (std::size_t u = 0; u < size(); ++u) {
    for (const auto& [w, c] : cols[u]) m[w][u] = c;
  }
  return m;
}

SparseOp SparseOp::compose(const SparseOp& right) const {
  SparseOp out = zero(size());
  for (std::size_t u = 0; u < size(); ++u) {
    std::map<int, Scalar> acc;
    for (const auto& [v, c] : right.cols[u]) {
      for (const auto& [w, d] : cols[v]) acc[w] += c * d;
    }
    for (const auto& [w, c] : acc) {
      if (c != 0) out.cols[u].emplace_back(w, c);
    }
  }
  return out;
}

SchubertModel SchubertModel::build(std::shared_ptr<const WeylGroup> weyl, Source source,
                                   std::size_t gkm_cap) {
  SchubertModel model;
  model.weyl_ = std::move(weyl);
  model.build_blocks();
  bool use_gkm = source == Source::GKM ||
                 (source == Source::Auto && model.size() <= gkm_cap);
  if (source == Source::GKM && model.size() > gkm_cap) {
    throw Error(ErrorCode::GroupTooLarge,
                "GKM model requested for |W| = " + std::to_string(model.size()) +
                    " above the cap " + std::to_string(gkm_cap));
  }
  if (use_gkm) {
    model.build_gkm();
  } else {
    model.build_combinatorial();
  }
  return model;
}

void SchubertModel::build_blocks() {
  const auto& W = *weyl_;
  blocks_.assign(W.max_length() + 1, {});
  position_.assign(W.size(), 0);
  for (std::size_t w = 0; w < W.size(); ++w) {
    auto& b = blocks_[W.length(static_cast<int>(w))];
    position_[w] = static_cast<int>(b.size());
    b.push_back(static_cast<int>(w));
  }
}

std::vector<int> SchubertModel::dims() const {
  std::vector<int> d;
  for (const auto& b : blocks_) d.push_back(static_cast<int>(b.size()));
  return d;
}

// A_i sigma_u = sigma_{u s_i} when u s_i < u; x_lambda sigma_u is the
// Chevalley sum over covers u -> u s_beta with coefficient -<lambda, beta^v>.
void SchubertModel::build_combinatorial() {
  const auto& W = *weyl_;
  const std::size_t n = W.size();
  const int rank = W.rank();
  const std::size_t nroots = W.datum().num_positive_roots();
  a_.assign(rank, SparseOp::zero(n));
  m_.assign(rank, SparseOp::zero(n));
  for (std::size_t u = 0; u < n; ++u) {
    int ui = static_cast<int>(u);
    for (int i = 0; i < rank; ++i) {
      if (W.right_descent(ui, i)) a_[i].cols[u].emplace_back(W.right(ui, i), 1);
    }
    std::map<int, std::vector<Scalar>> covers;
    for (std::size_t r = 0; r < nroots; ++r) {
      int v = W.mul(ui, W.reflection(static_cast<int>(r)));
      if (W.length(v) != W.length(ui) + 1) continue;
      auto& c = covers[v];
      c.resize(rank, 0);
      for (int j = 0; j < rank; ++j) c[j] -= W.coroot(static_cast<int>(r))[j];
    }
    for (const auto& [v, c] : covers) {
      for (int j = 0; j < rank; ++j) {
        if (c[j] != 0) m_[j].cols[u].emplace_back(v, c[j]);
      }
    }
  }
}

namespace {

SparseOp from_augmented(const SeriesMatrix& m) {
  auto dense = matrix_augment(m);
  SparseOp op = SparseOp::zero(dense.size());
  for (std::size_t w = 0; w < dense.size(); ++w) {
    for (std::size_t u = 0; u < dense.size(); ++u) {
      if (dense[w][u] != 0) op.cols[u].emplace_back(static_cast<int>(w), dense[w][u]);
    }
  }
  return op;
}

}  // namespace

void SchubertModel::build_gkm() {
  const int trunc = static_cast<int>(weyl_->datum().num_positive_roots()) + 2;
  auto fga = std::make_shared<FGAContext>(weyl_, FormalGroupLaw::additive(Ring::integers(), trunc));
  auto qw = std::make_shared<QWContext>(fga);
  gkm_ = std::make_shared<GKMModel>(qw);
  const int rank = weyl_->rank();
  for (int i = 0; i < rank; ++i) a_.push_back(from_augmented(gkm_->hecke_matrix(i)));
  for (int j = 0; j < rank; ++j) {
    m_.push_back(from_augmented(gkm_->mult_matrix(fga->x(weyl_->datum().basis_weight(j)))));
  }
}

SparseOp SchubertModel::schubert_multiplication(int u) const {
  if (!gkm_) {
    throw Error(ErrorCode::GroupTooLarge,
                "Schubert class multiplication needs the GKM model; |W| = " +
                    std::to_string(size()) + " is above its cap");
  }
  const auto& zeta = gkm_->schubert_dual_basis();
  SparseOp op = SparseOp::zero(size());
  for (std::size_t v = 0; v < size(); ++v) {
    auto c = gkm_->coordinates(gkm_->pointwise(zeta[u], zeta[v]));
    for (std::size_t w = 0; w < c.size(); ++w) {
      Scalar k = c[w].constant_term();
      if (k != 0) op.cols[v].emplace_back(static_cast<int>(w), k);
    }
  }
  return op;
}

SparseOp SchubertModel::push_pull_word(int w) const {
  SparseOp op = SparseOp::zero(size());
  for (std::size_t u = 0; u < size(); ++u) op.cols[u].emplace_back(static_cast<int>(u), 1);
  for (int i : weyl_->word(w)) op = op.compose(a_[i]);
  return op;
}

fp::Matrix SchubertModel::block_matrix(const SparseOp& op, int d, int shift,
                                       const fp::Field& f) const {
  const int target = d + shift;
  const int rows = (target >= 0 && target < static_cast<int>(blocks_.size()))
                       ? static_cast<int>(blocks_[target].size())
                       : 0;
  fp::Matrix m(rows, static_cast<int>(blocks_[d].size()));
  for (std::size_t k = 0; k < blocks_[d].size(); ++k) {
    for (const auto& [w, c] : op.cols[blocks_[d][k]]) {
      if (weyl_->length(w) != target) {
        throw Error(ErrorCode::InvalidArgument, "operator is not homogeneous of the stated degree");
      }
      m.at(position_[w], static_cast<int>(k)) = f.from_int(c);
    }
  }
  return m;
}

std::vector<long long> SchubertModel::characteristic_image_dims(const fp::Field& f) const {
  std::vector<long long> out;
  std::vector<std::vector<fp::u32>> layer{{1}};  // sigma_e
  for (std::size_t d = 0; d < blocks_.size(); ++d) {
    out.push_back(static_cast<long long>(layer.size()));
    if (d + 1 == blocks_.size() || layer.empty()) {
      for (std::size_t e = d + 1; e < blocks_.size(); ++e) out.push_back(0);
      break;
    }
    fp::RowSpace next(f, blocks_[d + 1].size());
    std::vector<std::vector<fp::u32>> basis;
    for (int j = 0; j < rank(); ++j) {
      fp::Matrix mj = block_matrix(m_[j], static_cast<int>(d), 1, f);
      for (const auto& v : layer) {
        auto img = fp::apply(f, mj, v);
        if (next.insert(img)) basis.push_back(img);
      }
    }
    layer = std::move(basis);
  }
  return out;
}

}  // namespace pushpull
