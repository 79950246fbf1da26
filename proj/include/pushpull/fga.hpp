#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pushpull/fgl.hpp"
#include "pushpull/rootdata.hpp"

namespace pushpull {

/// The formal group algebra S = R[[T*]]_F in the variables x_{omega_j},
/// with the Weyl action, divided differences and kappa elements.
class FGAContext {
 public:
  FGAContext(std::shared_ptr<const WeylGroup> weyl, FormalGroupLaw fgl);

  const WeylGroup& weyl() const { return *weyl_; }
  std::shared_ptr<const WeylGroup> weyl_ptr() const { return weyl_; }
  const RootDatum& datum() const { return weyl_->datum(); }
  const FormalGroupLaw& fgl() const { return fgl_; }
  const Ring& ring() const { return fgl_.ring(); }
  int nvars() const { return datum().rank(); }
  int trunc() const { return fgl_.trunc(); }
  bool graded_exact() const { return fgl_.graded_exact(); }

  Series zero() const { return Series(ring(), nvars()); }
  Series constant(Scalar c) const { return Series::constant(ring(), nvars(), c); }
  Series variable(int j) const { return Series::variable(ring(), nvars(), j); }

  /// x_lambda, built from the basis variables by binary formal sums.
  const Series& x(const Weight& lambda) const;
  /// x_{+beta_r} or x_{-beta_r} for positive root r.
  const Series& x_root(int r, bool negative = false) const;
  /// u_beta with x_{-beta} = x_beta * u_beta; constant term -1.
  const Series& root_unit(int r) const;
  /// 1 / u_beta.
  const Series& root_unit_inverse(int r) const;

  /// w(u): x_{omega_j} -> x_{w omega_j}.
  Series weyl_act(int w, const Series& u) const;
  /// (u - s_i u) / x_{-alpha_i}
  Series divided_difference(int i, const Series& u) const;
  /// 1/x_i + 1/x_{-i} computed as -G(x_i, x_{-i}).
  Series kappa(int i) const;
  /// The same element via exact division (x_i + x_{-i}) / (x_i x_{-i}).
  Series kappa_by_division(int i) const;

  /// Precision ceiling for intermediate numerators.
  int work_cap() const { return work_cap_; }

 private:
  std::shared_ptr<const WeylGroup> weyl_;
  FormalGroupLaw fgl_;
  int work_cap_;

  mutable std::recursive_mutex x_mutex_;
  mutable std::map<Weight, Series> x_cache_;
  mutable std::map<int, Series> unit_cache_;
  mutable std::map<int, Series> unit_inv_cache_;

  mutable std::mutex act_mutex_;
  // powers_[w][j][e] = x_{w omega_j}^e
  mutable std::map<int, std::vector<std::vector<Series>>> powers_;
};

}  // namespace pushpull
