#pragma once

#include <map>
#include <memory>
#include <vector>

#include "pushpull/fga.hpp"

namespace pushpull {

/// numerator / prod_beta x_beta^{den[beta]} over positive roots beta.
struct RootFraction {
  Series num;
  std::vector<int> den;

  int denominator_degree() const;
  bool is_zero() const { return num.is_zero(); }
  /// Degree up to which the value is trusted.
  int value_precision() const;
};

/// sum_w q_w delta_w, keyed by Weyl element index.
using QWElement = std::map<int, RootFraction>;

/// sum_w c_w Y_{I_w} with c_w in S.
using DemazureElement = std::map<int, Series>;

/// Arithmetic in the twisted group algebra Q_W and the Y_{I_w} basis.
class QWContext {
 public:
  explicit QWContext(std::shared_ptr<const FGAContext> fga);

  const FGAContext& fga() const { return *fga_; }
  std::shared_ptr<const FGAContext> fga_ptr() const { return fga_; }
  const WeylGroup& weyl() const { return fga_->weyl(); }
  std::size_t nroots() const { return nroots_; }

  // Fractions.
  RootFraction fraction(const Series& s) const;
  RootFraction add(const RootFraction& a, const RootFraction& b) const;
  RootFraction sub(const RootFraction& a, const RootFraction& b) const;
  RootFraction mul(const RootFraction& a, const RootFraction& b) const;
  RootFraction neg(const RootFraction& a) const;
  RootFraction act(int w, const RootFraction& f) const;
  /// Cancel every root factor that divides the numerator.
  RootFraction reduce(const RootFraction& f) const;
  /// The element of S equal to f; throws `code` when a denominator survives.
  Series to_series(const RootFraction& f, ErrorCode code = ErrorCode::NotInDemazureAlgebra) const;

  // Elements of Q_W.
  QWElement delta(int w) const;
  QWElement scalar(const Series& s) const;
  QWElement add(const QWElement& a, const QWElement& b) const;
  QWElement sub(const QWElement& a, const QWElement& b) const;
  QWElement mul(const QWElement& a, const QWElement& b) const;
  QWElement scale(const Series& s, const QWElement& a) const;
  bool is_zero(const QWElement& a) const;
  bool equal(const QWElement& a, const QWElement& b) const { return is_zero(sub(a, b)); }
  int value_precision(const QWElement& a) const;

  /// Y_i = 1/x_{-i} delta_e + 1/x_i delta_{s_i}
  QWElement y(int i) const;
  QWElement y_word(const std::vector<int>& word) const;
  /// Y_{I_w} for the canonical word of w (cached).
  const QWElement& y_basis(int w) const;

  /// Triangular solve in the Y_{I_w} basis with membership certificate.
  DemazureElement to_y_basis(const QWElement& z) const;
  QWElement from_y_basis(const DemazureElement& d) const;

 private:
  std::shared_ptr<const FGAContext> fga_;
  std::size_t nroots_;
  mutable std::mutex basis_mutex_;
  mutable std::map<int, QWElement> basis_;
};

}  // namespace pushpull
