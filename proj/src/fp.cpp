#include "pushpull/fp.hpp"

#include <algorithm>
#include <stdexcept>

#include "pushpull/error.hpp"

namespace pushpull::fp {

u32 Field::pow(u32 a, u64 e) const {
  u64 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 Field::inv(u32 a) const {
  if (a % p == 0) throw Error(ErrorCode::NotAUnit, "inverse of zero in F_p");
  return pow(a, p - 2);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

Matrix mul(const Field& f, const Matrix& x, const Matrix& y) {
  Matrix z(x.rows, y.cols);
  std::vector<u64> acc(y.cols);
  for (int i = 0; i < x.rows; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < x.cols; ++k) {
      u64 c = x.at(i, k);
      if (!c) continue;
      const u32* row = &y.a[static_cast<std::size_t>(k) * y.cols];
      for (int j = 0; j < y.cols; ++j) {
        acc[j] += c * row[j];
        if (acc[j] >= (u64{1} << 62)) acc[j] %= f.p;
      }
    }
    for (int j = 0; j < y.cols; ++j) z.at(i, j) = static_cast<u32>(acc[j] % f.p);
  }
  return z;
}

Matrix add(const Field& f, const Matrix& x, const Matrix& y) {
  Matrix z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] = f.add(z.a[k], y.a[k]);
  return z;
}

Matrix sub(const Field& f, const Matrix& x, const Matrix& y) {
  Matrix z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] = f.sub(z.a[k], y.a[k]);
  return z;
}

Matrix scale(const Field& f, u32 c, const Matrix& x) {
  Matrix z = x;
  for (auto& v : z.a) v = f.mul(v, c);
  return z;
}

Matrix transpose(const Matrix& x) {
  Matrix t(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) t.at(j, i) = x.at(i, j);
  }
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& f, Matrix& x) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < x.cols && r < x.rows; ++c) {
    int s = r;
    while (s < x.rows && x.at(s, c) == 0) ++s;
    if (s == x.rows) continue;
    if (s != r) {
      for (int j = 0; j < x.cols; ++j) std::swap(x.at(s, j), x.at(r, j));
    }
    u32 inv = f.inv(x.at(r, c));
    for (int j = c; j < x.cols; ++j) x.at(r, j) = f.mul(x.at(r, j), inv);
    for (int i = 0; i < x.rows; ++i) {
      if (i == r || x.at(i, c) == 0) continue;
      u32 m = x.at(i, c);
      for (int j = c; j < x.cols; ++j) x.at(i, j) = f.sub(x.at(i, j), f.mul(m, x.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int rank(const Field& f, Matrix x) { return static_cast<int>(rref(f, x).size()); }

Matrix inverse(const Field& f, const Matrix& x) {
  const int n = x.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv = rref(f, aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) {
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  }
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

Matrix nullspace(const Field& f, const Matrix& x) {
  Matrix r = x;
  std::vector<int> piv = rref(f, r);
  std::vector<bool> is_piv(x.cols, false);
  for (int c : piv) is_piv[c] = true;
  Matrix out(x.cols - static_cast<int>(piv.size()), x.cols);
  int k = 0;
  for (int c = 0; c < x.cols; ++c) {
    if (is_piv[c]) continue;
    out.at(k, c) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) out.at(k, piv[i]) = f.neg(r.at(static_cast<int>(i), c));
    ++k;
  }
  return out;
}

std::vector<u32> apply(const Field& f, const Matrix& x, const std::vector<u32>& v) {
  std::vector<u32> out(x.rows, 0);
  for (int i = 0; i < x.rows; ++i) {
    u64 acc = 0;
    for (int j = 0; j < x.cols; ++j) {
      acc += static_cast<u64>(x.at(i, j)) * v[j];
      if (acc >= (u64{1} << 62)) acc %= f.p;
    }
    out[i] = static_cast<u32>(acc % f.p);
  }
  return out;
}

void RowSpace::reduce(std::vector<u32>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    u32 c = v[pivots_[k]];
    if (!c) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < len_; ++j) {
      if (row[j]) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
  }
}

bool RowSpace::contains(std::vector<u32> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
}

bool RowSpace::insert(std::vector<u32> v) {
  std::vector<u32> combo;
  if (track_) {
    combo.assign(rows_.size() + 1, 0);
    combo.back() = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      u32 c = v[pivots_[k]];
      if (!c) continue;
      const auto& row = rows_[k];
      for (std::size_t j = pivots_[k]; j < len_; ++j) {
        if (row[j]) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
      }
      for (std::size_t m = 0; m < combos_[k].size(); ++m) {
        combo[m] = f_.sub(combo[m], f_.mul(c, combos_[k][m]));
      }
    }
  } else {
    reduce(v);
  }
  std::size_t piv = 0;
  while (piv < len_ && v[piv] == 0) ++piv;
  if (piv == len_) return false;
  u32 inv = f_.inv(v[piv]);
  for (std::size_t j = piv; j < len_; ++j) v[j] = f_.mul(v[j], inv);
  if (track_) {
    for (auto& c : combo) c = f_.mul(c, inv);
    combos_.push_back(std::move(combo));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool RowSpace::coordinates(std::vector<u32> v, std::vector<u32>& coords) const {
  if (!track_) throw std::logic_error("RowSpace::coordinates needs tracking");
  coords.assign(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    u32 c = v[pivots_[k]];
    if (!c) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < len_; ++j) {
      if (row[j]) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
    for (std::size_t m = 0; m < combos_[k].size(); ++m) {
      coords[m] = f_.add(coords[m], f_.mul(c, combos_[k][m]));
    }
  }
  return std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
}

// Polynomials.

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return poly_trim(std::move(c));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return poly_trim(std::move(c));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<u64>(a[i]) * b[j]) % f.p;
    }
  }
  Poly c(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) c[k] = static_cast<u32>(acc[k]);
  return poly_trim(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(ErrorCode::NotDivisible, "polynomial division by zero");
  Poly r = poly_trim(a);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  u32 inv = f.inv(b.back());
  for (int k = degree(r) - degree(b); k >= 0; --k) {
    u32 c = f.mul(r[k + b.size() - 1], inv);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b[j]));
  }
  return {poly_trim(std::move(q)), poly_trim(std::move(r))};
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& b) { return poly_divmod(f, a, b).second; }

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  u32 inv = f.inv(a.back());
  Poly c = a;
  for (auto& x : c) x = f.mul(x, inv);
  return c;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Poly poly_powmod(const Field& f, Poly base, u64 e, const Poly& m) {
  Poly r{1};
  r = poly_mod(f, r, m);
  base = poly_mod(f, base, m);
  while (e) {
    if (e & 1) r = poly_mod(f, poly_mul(f, r, base), m);
    e >>= 1;
    if (e) base = poly_mod(f, poly_mul(f, base, base), m);
  }
  return r;
}

Poly poly_derivative(const Field& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(a[i], f.from_int(static_cast<long long>(i)));
  return poly_trim(std::move(d));
}

Poly poly_inverse_mod(const Field& f, const Poly& a, const Poly& m) {
  // Invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m).
  Poly r0 = poly_mod(f, a, m), r1 = m, s0{1}, s1{};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    Poly s = poly_sub(f, s0, poly_mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw Error(ErrorCode::NotAUnit, "polynomial not invertible modulo m");
  u32 inv = f.inv(r0[0]);
  Poly s = s0;
  for (auto& x : s) x = f.mul(x, inv);
  return poly_mod(f, s, m);
}

namespace {

Poly pth_root(const Field& f, const Poly& a) {
  Poly r;
  for (std::size_t i = 0; i < a.size(); i += f.p) r.push_back(a[i]);
  return poly_trim(std::move(r));
}

// Square-free decomposition: (factor, multiplicity) with pairwise coprime factors.
void squarefree(const Field& f, const Poly& a, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (degree(a) < 1) return;
  Poly d = poly_derivative(f, a);
  if (d.empty()) {
    squarefree(f, pth_root(f, a), mult * static_cast<int>(f.p), out);
    return;
  }
  Poly c = poly_gcd(f, a, d);
  Poly w = poly_divmod(f, a, c).first;
  int i = 1;
  while (degree(w) >= 1) {
    Poly y = poly_gcd(f, w, c);
    Poly fac = poly_divmod(f, w, y).first;
    if (degree(fac) >= 1) out.push_back({poly_monic(f, fac), i * mult});
    w = y;
    c = poly_divmod(f, c, y).first;
    ++i;
  }
  if (degree(c) >= 1) squarefree(f, pth_root(f, c), mult * static_cast<int>(f.p), out);
}

Poly random_poly(const Field& f, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<u32> d(0, f.p - 1);
  Poly r(deg + 1);
  for (auto& x : r) x = d(rng);
  return poly_trim(std::move(r));
}

// Equal-degree factorization of a squarefree product of degree-d irreducibles.
void equal_degree(const Field& f, const Poly& a, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(a) == d) {
    out.push_back(poly_monic(f, a));
    return;
  }
  while (true) {
    Poly r = random_poly(f, degree(a) - 1, rng);
    if (degree(r) < 1) continue;
    Poly t;
    if (f.p == 2) {
      // Trace map r + r^2 + ... + r^{2^{d-1}}.
      Poly s = poly_mod(f, r, a);
      t = s;
      for (int k = 1; k < d; ++k) {
        s = poly_mod(f, poly_mul(f, s, s), a);
        t = poly_add(f, t, s);
      }
    } else {
      // r^{(p^d - 1)/2} = (r * r^p * ... * r^{p^{d-1}})^{(p-1)/2}
      Poly s = poly_mod(f, r, a);
      Poly prod = s;
      for (int k = 1; k < d; ++k) {
        s = poly_powmod(f, s, f.p, a);
        prod = poly_mod(f, poly_mul(f, prod, s), a);
      }
      t = poly_sub(f, poly_powmod(f, prod, (f.p - 1) / 2, a), Poly{1});
    }
    Poly g = poly_gcd(f, a, t);
    if (degree(g) >= 1 && degree(g) < degree(a)) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, poly_divmod(f, a, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Field& f, const Poly& a, std::mt19937_64& rng) {
  std::vector<std::pair<Poly, int>> sqf, out;
  squarefree(f, poly_monic(f, poly_trim(a)), 1, sqf);
  for (const auto& [g0, mult] : sqf) {
    Poly g = g0;
    Poly x{0, 1};
    Poly h = x;
    for (int d = 1; 2 * d <= degree(g); ++d) {
      h = poly_powmod(f, h, f.p, g);
      Poly part = poly_gcd(f, g, poly_sub(f, h, x));
      if (degree(part) >= 1) {
        std::vector<Poly> facs;
        equal_degree(f, part, d, rng, facs);
        for (auto& q : facs) out.push_back({q, mult});
        g = poly_divmod(f, g, part).first;
        h = poly_mod(f, h, g);
      }
    }
    if (degree(g) >= 1) out.push_back({poly_monic(f, g), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

Matrix poly_eval(const Field& f, const Poly& p, const Matrix& x) {
  Matrix r(x.rows, x.cols);
  for (int k = degree(p); k >= 0; --k) {
    r = mul(f, r, x);
    for (int i = 0; i < x.rows; ++i) r.at(i, i) = f.add(r.at(i, i), p[k]);
  }
  return r;
}

Poly charpoly(const Field& f, const Matrix& x0) {
  const int n = x0.rows;
  Matrix h = x0;
  // Similarity reduction to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    int piv = c + 1;
    while (piv < n && h.at(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
    }
    u32 inv = f.inv(h.at(c + 1, c));
    for (int r = c + 2; r < n; ++r) {
      u32 m = f.mul(h.at(r, c), inv);
      if (!m) continue;
      for (int j = 0; j < n; ++j) h.at(r, j) = f.sub(h.at(r, j), f.mul(m, h.at(c + 1, j)));
      for (int i = 0; i < n; ++i) h.at(i, c + 1) = f.add(h.at(i, c + 1), f.mul(m, h.at(i, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    p[k] = poly_mul(f, Poly{f.neg(h.at(k - 1, k - 1)), 1}, p[k - 1]);
    u32 prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, h.at(i, i - 1));
      if (!prod) break;
      u32 c = f.mul(h.at(i - 1, k - 1), prod);
      if (c) p[k] = poly_sub(f, p[k], poly_mul(f, Poly{c}, p[i - 1]));
    }
  }
  return p[n];
}

Poly minpoly(const Field& f, const Matrix& x) {
  const int n = x.rows;
  RowSpace span(f, static_cast<std::size_t>(n) * n, true);
  Matrix power = Matrix::identity(n);
  for (int k = 0;; ++k) {
    std::vector<u32> coords;
    if (span.coordinates(power.a, coords)) {
      Poly m(k + 1, 0);
      m[k] = 1;
      for (int j = 0; j < k; ++j) m[j] = f.neg(coords[j]);
      return m;
    }
    span.insert(power.a);
    power = mul(f, power, x);
  }
}

}  // namespace pushpull::fp
