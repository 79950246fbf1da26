#include "pushpull/fga.hpp"

namespace pushpull {

FGAContext::FGAContext(std::shared_ptr<const WeylGroup> weyl, FormalGroupLaw fgl)
    : weyl_(std::move(weyl)), fgl_(std::move(fgl)) {
  work_cap_ = fgl_.graded_exact()
                  ? kExact
                  : fgl_.trunc() + 2 * static_cast<int>(datum().num_positive_roots()) + 4;
}

const Series& FGAContext::x(const Weight& lambda) const {
  std::lock_guard lock(x_mutex_);
  auto it = x_cache_.find(lambda);
  if (it != x_cache_.end()) return it->second;

  Series total = zero();
  for (int j = 0; j < nvars(); ++j) {
    int c = lambda[j];
    if (c == 0) continue;
    // x_{|c| omega_j} by binary expansion of |c|.
    Series part = zero();
    Series power = variable(j);
    for (int k = c < 0 ? -c : c; k > 0; k >>= 1) {
      if (k & 1) part = fgl_.formal_sum(part, power);
      if (k > 1) power = fgl_.formal_sum(power, power);
    }
    if (c < 0) part = fgl_.formal_inverse(part);
    total = fgl_.formal_sum(total, part);
  }
  return x_cache_.emplace(lambda, std::move(total)).first->second;
}

const Series& FGAContext::x_root(int r, bool negative) const {
  Weight beta = datum().positive_roots()[r];
  if (negative) {
    for (auto& c : beta) c = -c;
  }
  return x(beta);
}

const Series& FGAContext::root_unit(int r) const {
  std::lock_guard lock(x_mutex_);
  auto it = unit_cache_.find(r);
  if (it != unit_cache_.end()) return it->second;
  std::vector<Series> images{x_root(r)};
  Series u = fgl_.inverse_cofactor().substitute(images);
  return unit_cache_.emplace(r, std::move(u)).first->second;
}

const Series& FGAContext::root_unit_inverse(int r) const {
  std::lock_guard lock(x_mutex_);
  auto it = unit_inv_cache_.find(r);
  if (it != unit_inv_cache_.end()) return it->second;
  Series inv = invert_unit(root_unit(r), work_cap_);
  return unit_inv_cache_.emplace(r, std::move(inv)).first->second;
}

Series FGAContext::weyl_act(int w, const Series& u) const {
  if (w == weyl_->identity() || u.is_zero()) return u;
  std::lock_guard lock(act_mutex_);
  auto& pw = powers_[w];
  if (pw.empty()) {
    for (int j = 0; j < nvars(); ++j) {
      const Series& img = x(weyl_->act(w, datum().basis_weight(j)));
      pw.push_back({constant(1), img});
    }
  }
  const int cap = u.is_exact() ? work_cap_ : std::min(u.precision(), work_cap_);
  auto power = [&](int j, int e) -> const Series& {
    auto& v = pw[j];
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back().mul_capped(v[1], work_cap_));
    return v[e];
  };
  Series result(ring(), nvars(), cap);
  for (const auto& [m, c] : u.terms()) {
    Series term = Series::constant(ring(), nvars(), c);
    for (int j = 0; j < nvars(); ++j) {
      int e = m.exponent(j);
      if (e) term = term.mul_capped(power(j, e), cap);
    }
    result += term;
  }
  return result;
}

Series FGAContext::divided_difference(int i, const Series& u) const {
  int si = weyl_->right(weyl_->identity(), i);
  Series num = u - weyl_act(si, u);
  try {
    return exact_divide(num, x_root(i, true));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
    throw Error(ErrorCode::DivisionFailed,
                "u - s_" + std::to_string(i + 1) + "(u) is not divisible by x_{-alpha_" +
                    std::to_string(i + 1) + "}: " + e.what());
  }
}

Series FGAContext::kappa(int i) const {
  return -fgl_.correction_at(x_root(i), x_root(i, true));
}

Series FGAContext::kappa_by_division(int i) const {
  const Series& a = x_root(i);
  const Series& b = x_root(i, true);
  try {
    return exact_divide(a + b, a * b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
    throw Error(ErrorCode::DivisionFailed, std::string("kappa division failed: ") + e.what());
  }
}

}  // namespace pushpull
