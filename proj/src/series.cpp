#include "pushpull/series.hpp"

#include <algorithm>
#include <sstream>

namespace pushpull {

namespace {

int clamp_precision(long long p) {
  if (p >= kExact) return kExact;
  return static_cast<int>(p);
}

}  // namespace

Monomial Monomial::variable(int j, int power) {
  if (j < 0 || j >= kMaxVars || power < 0 || power > 255) {
    throw Error(ErrorCode::InvalidArgument, "monomial exponent out of range");
  }
  return Monomial{static_cast<std::uint64_t>(power) << (8 * (kMaxVars - 1 - j))};
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    m = m * variable(static_cast<int>(j), exps[j]);
  }
  return m;
}

int Monomial::degree() const {
  // Byte sum; total degrees stay far below 256.
  return static_cast<int>((bits * 0x0101010101010101ULL) >> 56);
}

bool Monomial::divides(Monomial other) const {
  for (int j = 0; j < kMaxVars; ++j) {
    if (exponent(j) > other.exponent(j)) return false;
  }
  return true;
}

Series::Series(Ring ring, int nvars, int precision)
    : ring_(ring), nvars_(nvars), precision_(std::min(precision, kExact)) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument, "series supports at most 8 variables");
  }
}

Series Series::constant(Ring ring, int nvars, Scalar c, int precision) {
  Series s(ring, nvars, precision);
  c = ring.normalize(c);
  if (c != 0 && precision >= 0) s.terms_.push_back({Monomial{}, c});
  return s;
}

Series Series::variable(Ring ring, int nvars, int j, int precision) {
  if (j < 0 || j >= nvars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Series s(ring, nvars, precision);
  if (precision >= 1) s.terms_.push_back({Monomial::variable(j), 1});
  return s;
}

Series Series::from_terms(Ring ring, int nvars, std::vector<Term> terms, int precision) {
  Series s(ring, nvars, precision);
  s.terms_ = std::move(terms);
  for (auto& t : s.terms_) t.second = ring.normalize(t.second);
  s.canonicalize();
  return s;
}

void Series::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.first.degree() > precision_) continue;
    if (!out.empty() && out.back().first == t.first) {
      out.back().second = ring_.add(out.back().second, t.second);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

void Series::check_compatible(const Series& o) const {
  if (nvars_ != o.nvars_ || !(ring_ == o.ring_)) {
    throw Error(ErrorCode::InvalidArgument, "series from different rings");
  }
}

Scalar Series::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial k) { return t.first < k; });
  return (it != terms_.end() && it->first == m) ? it->second : 0;
}

int Series::valuation() const {
  if (terms_.empty()) return clamp_precision(static_cast<long long>(precision_) + 1);
  int v = kExact;
  for (const auto& t : terms_) v = std::min(v, t.first.degree());
  return v;
}

int Series::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

Series Series::homogeneous_part(int degree) const {
  Series s(ring_, nvars_, kExact);
  for (const auto& t : terms_) {
    if (t.first.degree() == degree) s.terms_.push_back(t);
  }
  return s;
}

Series Series::truncated(int precision) const {
  Series s(ring_, nvars_, std::min(precision, precision_));
  for (const auto& t : terms_) {
    if (t.first.degree() <= s.precision_) s.terms_.push_back(t);
  }
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& t : s.terms_) t.second = ring_.neg(t.second);
  return s;
}

Series Series::operator+(const Series& o) const {
  check_compatible(o);
  Series s(ring_, nvars_, std::min(precision_, o.precision_));
  s.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      s.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      s.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = ring_.add(terms_[i].second, o.terms_[j].second);
      if (c != 0) s.terms_.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  if (!s.is_exact()) {
    std::erase_if(s.terms_, [&](const Term& t) { return t.first.degree() > s.precision_; });
  }
  return s;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::mul_capped(const Series& o, int cap) const {
  check_compatible(o);
  long long p1 = static_cast<long long>(precision_) + o.valuation();
  long long p2 = static_cast<long long>(o.precision_) + valuation();
  int prec = clamp_precision(std::min({p1, p2, static_cast<long long>(cap)}));
  Series s(ring_, nvars_, prec);
  if (terms_.empty() || o.terms_.empty()) return s;
  s.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    int da = a.first.degree();
    if (da > prec) continue;
    for (const auto& b : o.terms_) {
      if (da + b.first.degree() > prec) continue;
      s.terms_.push_back({a.first * b.first, ring_.mul(a.second, b.second)});
    }
  }
  s.canonicalize();
  return s;
}

Series Series::operator*(const Series& o) const { return mul_capped(o, kExact); }

Series Series::scaled(Scalar c) const {
  c = ring_.normalize(c);
  Series s(ring_, nvars_, precision_);
  if (c == 0) return s;
  for (const auto& t : terms_) {
    Scalar v = ring_.mul(t.second, c);
    if (v != 0) s.terms_.push_back({t.first, v});
  }
  return s;
}

Series Series::times_monomial(Monomial m, Scalar c) const {
  Series s(ring_, nvars_, clamp_precision(static_cast<long long>(precision_) + m.degree()));
  c = ring_.normalize(c);
  if (c == 0) return s;
  for (const auto& t : terms_) {
    Scalar v = ring_.mul(t.second, c);
    if (v != 0) s.terms_.push_back({t.first * m, v});
  }
  return s;
}

Series Series::pow(int e) const {
  Series result = constant(ring_, nvars_, 1);
  Series base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Series Series::substitute(std::span<const Series> images) const {
  if (static_cast<int>(images.size()) != nvars_) {
    throw Error(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  }
  if (images.empty()) return *this;
  const Series& first = images.front();
  int target_vars = first.nvars();
  Ring ring = first.ring();
  int min_val = kExact;
  for (const auto& img : images) {
    if (img.nvars() != target_vars) {
      throw Error(ErrorCode::InvalidArgument, "substitution images disagree on variables");
    }
    min_val = std::min(min_val, img.valuation());
  }
  if (!is_exact() && min_val < 1) {
    throw Error(ErrorCode::NonzeroConstantTerm,
                "cannot substitute series with constant term into a truncated series");
  }
  // Unknown terms of degree > precision map to degree > precision*min_val.
  long long bound_ll = is_exact() ? kExact : static_cast<long long>(precision_ + 1) * min_val - 1;
  int bound = clamp_precision(bound_ll);

  int max_deg = max_degree();
  std::vector<std::vector<Series>> powers(nvars_);
  for (int j = 0; j < nvars_; ++j) {
    powers[j].push_back(Series::constant(ring, target_vars, 1));
  }
  auto power = [&](int j, int e) -> const Series& {
    auto& pj = powers[j];
    while (static_cast<int>(pj.size()) <= e) {
      pj.push_back(pj.back().mul_capped(images[j], bound));
    }
    return pj[e];
  };

  Series result(ring, target_vars, bound);
  (void)max_deg;
  for (const auto& t : terms_) {
    Series term = Series::constant(ring, target_vars, t.second);
    for (int j = 0; j < nvars_; ++j) {
      int e = t.first.exponent(j);
      if (e) term = term.mul_capped(power(j, e), bound);
    }
    result = result + term;
  }
  return result;
}

bool Series::agrees_with(const Series& o) const {
  Series d = *this - o;
  return d.is_zero();
}

std::string Series::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return is_exact() ? "0" : "O(" + std::to_string(precision_ + 1) + ")";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    if (ring_.kind() != Ring::Kind::Integers && v > ring_.modulus() / 2 && ring_.modulus() > 2) {
      v -= ring_.modulus();
    }
    if (!first) out << (v < 0 ? " - " : " + ");
    else if (v < 0) out << "-";
    first = false;
    Scalar a = v < 0 ? -v : v;
    bool unit_coeff = (a == 1) && m.degree() > 0;
    if (!unit_coeff) out << a;
    bool need_star = !unit_coeff;
    for (int j = 0; j < nvars_; ++j) {
      int e = m.exponent(j);
      if (!e) continue;
      if (need_star) out << "*";
      need_star = true;
      if (j < static_cast<int>(names.size())) out << names[j];
      else out << "x" << (j + 1);
      if (e > 1) out << "^" << e;
    }
  }
  if (!is_exact()) out << " + O(" << precision_ + 1 << ")";
  return out.str();
}

namespace {

Series homogeneous_divide(const Series& h, const Series& lead) {
  const Ring& ring = h.ring();
  const auto& lt = lead.terms().back();
  std::vector<Series::Term> quotient;
  Series rem = h;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    if (!lt.first.divides(top.first) || !ring.divides(lt.second, top.second)) {
      throw Error(ErrorCode::NotDivisible, "exact division left a nonzero remainder");
    }
    Monomial m = top.first / lt.first;
    Scalar c = ring.exact_div(top.second, lt.second);
    quotient.push_back({m, c});
    rem = rem - lead.times_monomial(m, c);
  }
  return Series::from_terms(ring, h.nvars(), std::move(quotient));
}

}  // namespace

Series exact_divide(const Series& u, const Series& v) {
  if (u.nvars() != v.nvars() || !(u.ring() == v.ring())) {
    throw Error(ErrorCode::InvalidArgument, "division of series from different rings");
  }
  if (v.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero series");
  const int k = v.valuation();
  const Series lead = v.homogeneous_part(k);
  const bool exact = u.is_exact() && v.is_exact();

  int qprec;
  if (exact) {
    qprec = kExact;
  } else {
    long long vu = u.valuation();
    long long p = std::min<long long>(u.precision(), static_cast<long long>(v.precision()) + vu - k) - k;
    if (p < 0) {
      throw Error(ErrorCode::PrecisionLoss, "quotient has no trusted degree");
    }
    qprec = clamp_precision(p);
  }

  for (const auto& t : u.terms()) {
    if (t.first.degree() < k) {
      throw Error(ErrorCode::NotDivisible, "dividend has terms below the divisor's order");
    }
  }

  int last = exact ? u.max_degree() - k : qprec;
  Series rem = u;
  std::vector<Series::Term> q;
  for (int t = 0; t <= last; ++t) {
    Series h = rem.homogeneous_part(t + k);
    if (h.is_zero()) continue;
    Series qt = homogeneous_divide(h, lead);
    for (const auto& term : qt.terms()) q.push_back(term);
    rem = rem - qt * v;
  }
  if (exact && !rem.is_zero()) {
    throw Error(ErrorCode::NotDivisible, "exact division left a nonzero remainder");
  }
  return Series::from_terms(u.ring(), u.nvars(), std::move(q), qprec);
}

Series invert_unit(const Series& u, int cap) {
  const Ring& ring = u.ring();
  Scalar c = u.constant_term();
  if (!ring.is_unit(c)) {
    throw Error(ErrorCode::NotAUnit, "constant term " + std::to_string(c) + " is not a unit");
  }
  Scalar cinv = ring.inverse(c);
  if (u.is_exact() && u.max_degree() == 0) {
    return Series::constant(ring, u.nvars(), cinv);
  }
  int prec = std::min(u.precision(), cap);
  if (prec >= kExact) {
    throw Error(ErrorCode::PrecisionLoss, "inverse of a non-constant polynomial needs a precision cap");
  }
  Series w = Series::constant(ring, u.nvars(), cinv, prec);
  for (int t = 1; t <= prec; ++t) {
    Series e = u.truncated(t).mul_capped(w, t).homogeneous_part(t);
    w = w - e.scaled(cinv).truncated(prec);
  }
  return w;
}

}  // namespace pushpull
