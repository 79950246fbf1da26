#include "pushpull/qw.hpp"

#include <numeric>

namespace pushpull {

namespace {

void require_precision(int value_precision, const char* where) {
  if (value_precision < 0) {
    throw Error(ErrorCode::PrecisionLoss,
                std::string(where) + ": no trusted degree left; raise --trunc");
  }
}

}  // namespace

int RootFraction::denominator_degree() const { return std::accumulate(den.begin(), den.end(), 0); }

int RootFraction::value_precision() const {
  if (num.is_exact()) return kExact;
  return num.precision() - denominator_degree();
}

QWContext::QWContext(std::shared_ptr<const FGAContext> fga)
    : fga_(std::move(fga)), nroots_(fga_->datum().num_positive_roots()) {
  for (std::size_t r = 0; r < nroots_; ++r) {
    const Series& xr = fga_->x_root(static_cast<int>(r));
    if (xr.is_zero() || xr.homogeneous_part(1).is_zero()) {
      throw Error(ErrorCode::DivisionFailed,
                  "x_beta for root " + std::to_string(r + 1) +
                      " has no linear term over " + fga_->ring().name() +
                      "; the root classes are not regular");
    }
  }
}

RootFraction QWContext::fraction(const Series& s) const { return {s, std::vector<int>(nroots_, 0)}; }

namespace {

int numerator_cap(const FGAContext& fga, int den_degree) {
  if (fga.graded_exact()) return kExact;
  return std::min(fga.work_cap(), fga.trunc() + den_degree + 2);
}

Series times_roots(const FGAContext& fga, Series s, const std::vector<int>& mult, int cap) {
  for (std::size_t r = 0; r < mult.size(); ++r) {
    for (int k = 0; k < mult[r]; ++k) s = s.mul_capped(fga.x_root(static_cast<int>(r)), cap);
  }
  return s;
}

}  // namespace

RootFraction QWContext::add(const RootFraction& a, const RootFraction& b) const {
  if (a.is_zero() && a.num.is_exact()) return b;
  if (b.is_zero() && b.num.is_exact()) return a;
  std::vector<int> den(nroots_);
  std::vector<int> ea(nroots_), eb(nroots_);
  int deg = 0;
  for (std::size_t r = 0; r < nroots_; ++r) {
    den[r] = std::max(a.den[r], b.den[r]);
    ea[r] = den[r] - a.den[r];
    eb[r] = den[r] - b.den[r];
    deg += den[r];
  }
  int cap = numerator_cap(*fga_, deg);
  Series num = times_roots(*fga_, a.num, ea, cap) + times_roots(*fga_, b.num, eb, cap);
  return {std::move(num), std::move(den)};
}

RootFraction QWContext::neg(const RootFraction& a) const { return {-a.num, a.den}; }

RootFraction QWContext::sub(const RootFraction& a, const RootFraction& b) const { return add(a, neg(b)); }

RootFraction QWContext::mul(const RootFraction& a, const RootFraction& b) const {
  std::vector<int> den(nroots_);
  for (std::size_t r = 0; r < nroots_; ++r) den[r] = a.den[r] + b.den[r];
  RootFraction out{Series(fga_->ring(), fga_->nvars()), std::move(den)};
  out.num = a.num.mul_capped(b.num, numerator_cap(*fga_, out.denominator_degree()));
  return out;
}

RootFraction QWContext::act(int w, const RootFraction& f) const {
  if (w == weyl().identity()) return f;
  RootFraction out{fga_->weyl_act(w, f.num), std::vector<int>(nroots_, 0)};
  int cap = numerator_cap(*fga_, f.denominator_degree());
  for (std::size_t r = 0; r < nroots_; ++r) {
    if (!f.den[r]) continue;
    int img = weyl().root_image(w, static_cast<int>(r));
    int g = (img > 0 ? img : -img) - 1;
    out.den[g] += f.den[r];
    if (img < 0) {
      // 1/x_{-gamma} = u_gamma^{-1} / x_gamma
      for (int k = 0; k < f.den[r]; ++k) out.num = out.num.mul_capped(fga_->root_unit_inverse(g), cap);
    }
  }
  return out;
}

RootFraction QWContext::reduce(const RootFraction& f) const {
  RootFraction out = f;
  if (out.num.is_zero()) {
    require_precision(out.value_precision(), "reduce");
    int p = out.num.is_exact() ? kExact : out.value_precision();
    return {Series(fga_->ring(), fga_->nvars(), p), std::vector<int>(nroots_, 0)};
  }
  for (std::size_t r = 0; r < nroots_; ++r) {
    while (out.den[r] > 0) {
      try {
        out.num = exact_divide(out.num, fga_->x_root(static_cast<int>(r)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisible) throw;
        break;
      }
      --out.den[r];
    }
  }
  return out;
}

Series QWContext::to_series(const RootFraction& f, ErrorCode code) const {
  require_precision(f.value_precision(), "to_series");
  RootFraction r = reduce(f);
  for (int m : r.den) {
    if (m > 0) {
      throw Error(code, "coefficient " + r.num.to_string() + " keeps a root denominator");
    }
  }
  return r.num;
}

QWElement QWContext::delta(int w) const {
  return {{w, fraction(fga_->constant(1))}};
}

QWElement QWContext::scalar(const Series& s) const {
  if (s.is_zero()) return {};
  return {{weyl().identity(), fraction(s)}};
}

QWElement QWContext::add(const QWElement& a, const QWElement& b) const {
  QWElement out = a;
  for (const auto& [w, q] : b) {
    auto it = out.find(w);
    if (it == out.end()) {
      if (!q.is_zero()) out.emplace(w, q);
      continue;
    }
    it->second = add(it->second, q);
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

QWElement QWContext::sub(const QWElement& a, const QWElement& b) const {
  QWElement nb;
  for (const auto& [w, q] : b) nb.emplace(w, neg(q));
  return add(a, nb);
}

QWElement QWContext::mul(const QWElement& a, const QWElement& b) const {
  QWElement out;
  for (const auto& [w, q] : a) {
    for (const auto& [v, r] : b) {
      RootFraction term = mul(q, act(w, r));
      if (term.is_zero()) continue;
      out = add(out, QWElement{{weyl().mul(w, v), std::move(term)}});
    }
  }
  return out;
}

QWElement QWContext::scale(const Series& s, const QWElement& a) const {
  QWElement out;
  for (const auto& [w, q] : a) {
    RootFraction t = mul(fraction(s), q);
    if (!t.is_zero()) out.emplace(w, std::move(t));
  }
  return out;
}

bool QWContext::is_zero(const QWElement& a) const {
  for (const auto& [w, q] : a) {
    if (!q.is_zero()) return false;
  }
  return true;
}

int QWContext::value_precision(const QWElement& a) const {
  int p = kExact;
  for (const auto& [w, q] : a) p = std::min(p, q.value_precision());
  return p;
}

QWElement QWContext::y(int i) const {
  RootFraction a = fraction(fga_->root_unit_inverse(i));
  a.den[i] = 1;
  RootFraction b = fraction(fga_->constant(1));
  b.den[i] = 1;
  QWElement out;
  out.emplace(weyl().identity(), std::move(a));
  out.emplace(weyl().right(weyl().identity(), i), std::move(b));
  return out;
}

QWElement QWContext::y_word(const std::vector<int>& word) const {
  QWElement out = delta(weyl().identity());
  for (int i : word) {
    if (i < 0 || i >= fga_->nvars()) throw Error(ErrorCode::InvalidArgument, "letter out of range");
    out = mul(out, y(i));
  }
  return out;
}

const QWElement& QWContext::y_basis(int w) const {
  std::lock_guard lock(basis_mutex_);
  auto it = basis_.find(w);
  if (it != basis_.end()) return it->second;
  // Canonical words are prefix closed: I_w = I_{w s_i} i.
  std::vector<int> chain{w};
  while (chain.back() != weyl().identity() && !basis_.count(chain.back())) {
    int v = chain.back();
    chain.push_back(weyl().right(v, weyl().word(v).back()));
  }
  if (chain.back() == weyl().identity() && !basis_.count(weyl().identity())) {
    basis_.emplace(weyl().identity(), delta(weyl().identity()));
  }
  for (auto k = chain.size() - 1; k-- > 0;) {
    int v = chain[k];
    const QWElement& prev = basis_.at(chain[k + 1]);
    basis_.emplace(v, mul(prev, y(weyl().word(v).back())));
  }
  return basis_.at(w);
}

DemazureElement QWContext::to_y_basis(const QWElement& z) const {
  QWElement rest;
  for (const auto& [w, q] : z) {
    if (!q.is_zero()) rest.emplace(w, q);
  }
  DemazureElement out;
  while (!rest.empty()) {
    // Indices are sorted by length, so the last key has maximal length.
    auto top = std::prev(rest.end());
    int w = top->first;
    const QWElement& yw = y_basis(w);
    const RootFraction& lead = yw.at(w);
    int cap = numerator_cap(*fga_, top->second.denominator_degree() + lead.denominator_degree());
    Series lead_inv = invert_unit(lead.num, cap);
    RootFraction c_frac{times_roots(*fga_, top->second.num, lead.den, cap).mul_capped(lead_inv, cap),
                        top->second.den};
    Series c = to_series(c_frac, ErrorCode::NotInDemazureAlgebra);
    rest = sub(rest, scale(c, yw));
    auto it = rest.find(w);
    if (it != rest.end()) {
      throw Error(ErrorCode::NotInDemazureAlgebra,
                  "triangular solve left a residue at " + weyl().word_string(w));
    }
    if (!c.is_zero()) out.emplace(w, std::move(c));
  }
  return out;
}

QWElement QWContext::from_y_basis(const DemazureElement& d) const {
  QWElement out;
  for (const auto& [w, c] : d) out = add(out, scale(c, y_basis(w)));
  return out;
}

}  // namespace pushpull
