#include "pushpull/gkm.hpp"

namespace pushpull {

GKMModel::GKMModel(std::shared_ptr<const QWContext> qw) : qw_(std::move(qw)) {}

GKMFunction GKMModel::char_map(const Series& u) const {
  GKMFunction f;
  f.reserve(size());
  for (std::size_t w = 0; w < size(); ++w) {
    f.push_back(qw_->fraction(qw_->fga().weyl_act(static_cast<int>(w), u)));
  }
  return f;
}

GKMFunction GKMModel::constant(const Series& u) const {
  return GKMFunction(size(), qw_->fraction(u));
}

GKMFunction GKMModel::hecke_op(int i, const GKMFunction& f) const {
  const WeylGroup& W = qw_->weyl();
  QWElement yi = qw_->y(i);
  const RootFraction& a = yi.at(W.identity());
  const RootFraction& b = yi.at(W.right(W.identity(), i));
  GKMFunction out;
  out.reserve(size());
  for (std::size_t w = 0; w < size(); ++w) {
    int v = static_cast<int>(w);
    RootFraction val = qw_->add(qw_->mul(qw_->act(v, a), f[w]), qw_->mul(qw_->act(v, b), f[W.right(v, i)]));
    out.push_back(qw_->fraction(qw_->to_series(val, ErrorCode::DenominatorNotCleared)));
  }
  return out;
}

GKMFunction GKMModel::pointwise(const GKMFunction& f, const GKMFunction& g) const {
  GKMFunction out;
  out.reserve(size());
  for (std::size_t w = 0; w < size(); ++w) out.push_back(qw_->mul(f[w], g[w]));
  return out;
}

RootFraction GKMModel::pair(const GKMFunction& f, const QWElement& z) const {
  RootFraction acc = qw_->fraction(qw_->fga().zero());
  for (const auto& [v, q] : z) acc = qw_->add(acc, qw_->mul(q, f[v]));
  return acc;
}

const std::vector<GKMFunction>& GKMModel::schubert_dual_basis() const {
  std::call_once(dual_once_, [this] {
    const std::size_t N = size();
    const RootFraction zero = qw_->fraction(qw_->fga().zero());
    dual_.assign(N, GKMFunction(N, zero));
    for (std::size_t w = 0; w < N; ++w) {
      // Forward substitution in length order: sum_v a_{uv} zeta_w(v) = delta_{uw}.
      for (std::size_t u = w; u < N; ++u) {
        const QWElement& yu = qw_->y_basis(static_cast<int>(u));
        RootFraction rhs = qw_->fraction(qw_->fga().constant(u == w ? 1 : 0));
        for (const auto& [v, q] : yu) {
          if (static_cast<std::size_t>(v) == u || dual_[w][v].is_zero()) continue;
          rhs = qw_->sub(rhs, qw_->mul(q, dual_[w][v]));
        }
        if (rhs.is_zero()) continue;
        const RootFraction& lead = yu.at(static_cast<int>(u));
        // Divide by lead = num / prod x: multiply by prod x, divide by the unit num.
        RootFraction t = rhs;
        for (std::size_t r = 0; r < lead.den.size(); ++r) {
          for (int k = 0; k < lead.den[r]; ++k) {
            t.num = t.num * qw_->fga().x_root(static_cast<int>(r));
          }
        }
        t.num = t.num * invert_unit(lead.num, qw_->fga().work_cap());
        dual_[w][u] = qw_->fraction(qw_->to_series(t, ErrorCode::DenominatorNotCleared));
      }
    }
  });
  return dual_;
}

std::vector<Series> GKMModel::coordinates(const GKMFunction& f) const {
  std::vector<Series> c;
  c.reserve(size());
  for (std::size_t u = 0; u < size(); ++u) {
    c.push_back(qw_->to_series(pair(f, qw_->y_basis(static_cast<int>(u))), ErrorCode::DenominatorNotCleared));
  }
  return c;
}

GKMFunction GKMModel::from_coordinates(const std::vector<Series>& c) const {
  const auto& zeta = schubert_dual_basis();
  GKMFunction f(size(), qw_->fraction(qw_->fga().zero()));
  for (std::size_t w = 0; w < size(); ++w) {
    if (c[w].is_zero()) continue;
    for (std::size_t v = 0; v < size(); ++v) {
      f[v] = qw_->add(f[v], qw_->mul(qw_->fraction(c[w]), zeta[w][v]));
    }
  }
  return f;
}

namespace {

SeriesMatrix transpose(const SeriesMatrix& m) {
  SeriesMatrix t(m[0].size(), std::vector<Series>(m.size(), m[0][0]));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace

SeriesMatrix GKMModel::hecke_matrix(int i) const {
  const auto& zeta = schubert_dual_basis();
  SeriesMatrix cols;
  for (std::size_t u = 0; u < size(); ++u) cols.push_back(coordinates(hecke_op(i, zeta[u])));
  return transpose(cols);
}

SeriesMatrix GKMModel::mult_matrix(const Series& u) const {
  const auto& zeta = schubert_dual_basis();
  GKMFunction cu = char_map(u);
  SeriesMatrix cols;
  for (std::size_t v = 0; v < size(); ++v) cols.push_back(coordinates(pointwise(cu, zeta[v])));
  return transpose(cols);
}

SeriesMatrix GKMModel::element_matrix(const QWElement& z) const {
  const std::size_t N = size();
  SeriesMatrix m(N, std::vector<Series>(N, qw_->fga().zero()));
  for (std::size_t w = 0; w < N; ++w) {
    DemazureElement d = qw_->to_y_basis(qw_->mul(qw_->y_basis(static_cast<int>(w)), z));
    for (const auto& [u, c] : d) m[w][u] = c;
  }
  return m;
}

SeriesMatrix matrix_mul(const SeriesMatrix& a, const SeriesMatrix& b) {
  const std::size_t n = a.size();
  const Series zero(a[0][0].ring(), a[0][0].nvars());
  SeriesMatrix c(n, std::vector<Series>(b[0].size(), zero));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

SeriesMatrix matrix_add(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  }
  return c;
}

SeriesMatrix matrix_identity(const Ring& ring, int nvars, std::size_t n) {
  SeriesMatrix m(n, std::vector<Series>(n, Series(ring, nvars)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Series::constant(ring, nvars, 1);
  return m;
}

bool matrix_equal(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (!(a[i][j] - b[i][j]).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::vector<Scalar>> matrix_augment(const SeriesMatrix& a) {
  std::vector<std::vector<Scalar>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& s : a[i]) out[i].push_back(s.constant_term());
  }
  return out;
}

}  // namespace pushpull
