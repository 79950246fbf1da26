#pragma once

#include <memory>
#include <vector>

#include "pushpull/qw.hpp"

namespace pushpull {

/// Function W -> Q, indexed by Weyl element.
using GKMFunction = std::vector<RootFraction>;
using SeriesMatrix = std::vector<std::vector<Series>>;

/// The dual model D_F^* as functions on W, with Hecke operators and the
/// Schubert-dual basis zeta_w (<zeta_w, Y_{I_u}> = delta_{w,u}).
///
/// Operator matrices act on columns: entry [w][u] is the zeta_w-coordinate of
/// the image of zeta_u. With f -> f(. z) this gives M(zz') = M(z) M(z').
class GKMModel {
 public:
  explicit GKMModel(std::shared_ptr<const QWContext> qw);

  const QWContext& qw() const { return *qw_; }
  std::size_t size() const { return qw_->weyl().size(); }

  GKMFunction char_map(const Series& u) const;
  GKMFunction constant(const Series& u) const;
  /// A_i(f)(w) = w(1/x_{-i}) f(w) + w(1/x_i) f(w s_i); values certified in S.
  GKMFunction hecke_op(int i, const GKMFunction& f) const;
  GKMFunction pointwise(const GKMFunction& f, const GKMFunction& g) const;
  /// f(z) = sum_v z_v f(v)
  RootFraction pair(const GKMFunction& f, const QWElement& z) const;

  const std::vector<GKMFunction>& schubert_dual_basis() const;
  /// Coefficients of f in the zeta basis, certified in S.
  std::vector<Series> coordinates(const GKMFunction& f) const;
  GKMFunction from_coordinates(const std::vector<Series>& c) const;

  SeriesMatrix hecke_matrix(int i) const;
  SeriesMatrix mult_matrix(const Series& u) const;
  /// [w][u] = coefficient of Y_{I_u} in Y_{I_w} z.
  SeriesMatrix element_matrix(const QWElement& z) const;

 private:
  std::shared_ptr<const QWContext> qw_;
  mutable std::once_flag dual_once_;
  mutable std::vector<GKMFunction> dual_;
};

SeriesMatrix matrix_mul(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix matrix_add(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix matrix_identity(const Ring& ring, int nvars, std::size_t n);
bool matrix_equal(const SeriesMatrix& a, const SeriesMatrix& b);
/// Constant terms (augmentation S -> R).
std::vector<std::vector<Scalar>> matrix_augment(const SeriesMatrix& a);

}  // namespace pushpull
