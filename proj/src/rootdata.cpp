#include "pushpull/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>

#include "pushpull/error.hpp"

namespace pushpull {

namespace {

[[noreturn]] void bad_type(const std::string& what) {
  throw Error(ErrorCode::InvalidCartanType, what);
}

struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction make(long long n, long long d) {
    if (d < 0) n = -n, d = -d;
    long long g = std::gcd(n, d);
    if (g > 1) n /= g, d /= g;
    return {n, d};
  }
  Fraction operator-(const Fraction& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Fraction operator*(const Fraction& o) const { return make(num * o.num, den * o.den); }
  Fraction operator/(const Fraction& o) const { return make(num * o.den, den * o.num); }
};

// Solves X * P = C over Q; returns false if P is singular.
bool solve_right(const IntMatrix& p, const IntMatrix& c, std::vector<std::vector<Fraction>>& x) {
  const int n = static_cast<int>(p.size());
  // Work with P^T X^T = C^T: augmented [P^T | C^T].
  std::vector<std::vector<Fraction>> m(n, std::vector<Fraction>(2 * n));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      m[r][k] = {p[k][r], 1};
      m[r][n + k] = {c[k][r], 1};
    }
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col].num == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    Fraction d = m[col][col];
    for (auto& e : m[col]) e = e / d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].num == 0) continue;
      Fraction f = m[r][col];
      for (int k = 0; k < 2 * n; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  x.assign(n, std::vector<Fraction>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x[i][j] = m[j][n + i];
  }
  return true;
}

}  // namespace

CartanType CartanType::parse(const std::string& text, int rank) {
  if (text.empty()) bad_type("empty Cartan type");
  CartanType t;
  t.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (text.size() > 1) {
    try {
      std::size_t used = 0;
      t.rank = std::stoi(text.substr(1), &used);
      if (used != text.size() - 1) bad_type("bad Cartan type '" + text + "'");
    } catch (const std::logic_error&) {
      bad_type("bad Cartan type '" + text + "'");
    }
    if (rank > 0 && rank != t.rank) bad_type("rank disagrees with type '" + text + "'");
  } else {
    t.rank = rank;
  }
  cartan_matrix(t);
  return t;
}

IntMatrix cartan_matrix(CartanType type) {
  const int n = type.rank;
  const char x = type.letter;
  bool ok = n >= 1 && n <= 8;
  switch (x) {
    case 'A': break;
    case 'B': case 'C': ok = ok && n >= 2; break;
    case 'D': ok = ok && n >= 3; break;
    case 'E': ok = ok && n >= 6; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) bad_type("no finite Cartan type " + type.label() + " of rank at most 8");

  IntMatrix c(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (x) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      break;
    case 'G':
      link(0, 1);
      c[1][0] = -3;
      break;
  }
  return c;
}

std::vector<int> weyl_degrees(CartanType type) {
  cartan_matrix(type);
  const int n = type.rank;
  std::vector<int> d;
  switch (type.letter) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
  }
  return d;
}

std::size_t weyl_order(CartanType type) {
  std::size_t order = 1;
  for (int d : weyl_degrees(type)) order *= static_cast<std::size_t>(d);
  return order;
}

std::vector<long long> degree_poincare(CartanType type) {
  std::vector<long long> poly{1};
  for (int d : weyl_degrees(type)) {
    std::vector<long long> next(poly.size() + d - 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      for (int e = 0; e < d; ++e) next[k + e] += poly[k];
    }
    poly = std::move(next);
  }
  return poly;
}

LatticeSpec LatticeSpec::parse(const std::string& text) {
  if (text == "sc") return simply_connected();
  if (text == "ad") return adjoint();
  std::ifstream in(text);
  if (!in) throw Error(ErrorCode::InvalidArgument, "lattice must be sc, ad, or a readable file: " + text);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    return from_pairing(doc.at("pairing").get<IntMatrix>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "bad lattice file " + text + ": " + e.what());
  }
}

RootDatum RootDatum::create(CartanType type, const LatticeSpec& lattice) {
  RootDatum d;
  d.type_ = type;
  d.cartan_ = cartan_matrix(type);
  const int n = type.rank;

  switch (lattice.kind) {
    case LatticeSpec::Kind::SimplyConnected:
      d.lattice_name_ = "sc";
      d.pairing_.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) d.pairing_[i][i] = 1;
      break;
    case LatticeSpec::Kind::Adjoint:
      d.lattice_name_ = "ad";
      d.pairing_ = d.cartan_;
      break;
    case LatticeSpec::Kind::Pairing:
      d.lattice_name_ = "custom";
      d.pairing_ = lattice.pairing;
      if (static_cast<int>(d.pairing_.size()) != n) {
        throw Error(ErrorCode::LatticeNotContainingRoots, "pairing matrix must be n x n");
      }
      for (const auto& row : d.pairing_) {
        if (static_cast<int>(row.size()) != n) {
          throw Error(ErrorCode::LatticeNotContainingRoots, "pairing matrix must be n x n");
        }
      }
      break;
  }

  // Simple roots in lattice coordinates: alpha = C P^{-1}.
  std::vector<std::vector<Fraction>> a;
  if (!solve_right(d.pairing_, d.cartan_, a)) {
    throw Error(ErrorCode::LatticeNotContainingRoots, "pairing matrix is singular");
  }
  d.simple_.assign(n, Weight(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a[i][j].den != 1) {
        throw Error(ErrorCode::LatticeNotContainingRoots,
                    "simple root " + std::to_string(i + 1) + " is not in the lattice");
      }
      d.simple_[i][j] = static_cast<int>(a[i][j].num);
    }
  }

  d.coxeter_.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int prod = d.cartan_[i][j] * d.cartan_[j][i];
      static const int table[] = {2, 3, 4, 6};
      d.coxeter_[i][j] = table[prod];
    }
  }

  // Positive roots by root strings, in simple-root coordinates.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    found.insert(e);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;  // <beta, alpha_i^vee>
        for (int k = 0; k < n; ++k) pairing += beta[k] * d.cartan_[k][i];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (found.insert(up).second) {
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }
  auto height = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x > y;
  });
  for (const auto& beta : all) {
    Weight w(n, 0);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) w[j] += beta[k] * d.simple_[k][j];
    }
    d.root_lookup_[w] = static_cast<int>(d.roots_.size());
    d.roots_.push_back(w);
    d.roots_alpha_.push_back(beta);
  }
  return d;
}

int RootDatum::root_index(const Weight& beta) const {
  auto it = root_lookup_.find(beta);
  return it == root_lookup_.end() ? -1 : it->second;
}

int RootDatum::pair(const Weight& lambda, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += lambda[j] * pairing_[j][i];
  return s;
}

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  int c = pair(lambda, i);
  Weight out = lambda;
  for (int j = 0; j < rank(); ++j) out[j] -= c * simple_[i][j];
  return out;
}

Weight RootDatum::basis_weight(int j) const {
  Weight w(rank(), 0);
  w[j] = 1;
  return w;
}

nlohmann::json RootDatum::to_json() const {
  return {{"type", std::string(1, type_.letter)},
          {"rank", rank()},
          {"lattice", lattice_name_},
          {"cartan_matrix", cartan_},
          {"pairing_matrix", pairing_},
          {"simple_roots", simple_},
          {"coxeter_matrix", coxeter_},
          {"positive_roots", roots_},
          {"positive_roots_simple_coords", roots_alpha_}};
}

WeylGroup::WeylGroup(const RootDatum& datum, std::size_t cap)
    : datum_(datum), rank_(datum.rank()), nroots_(datum.num_positive_roots()) {
  const std::size_t expected = weyl_order(datum.type());
  if (expected > cap) {
    throw Error(ErrorCode::GroupTooLarge, "|W(" + datum.type().label() + ")| = " +
                                              std::to_string(expected) + " exceeds the cap " +
                                              std::to_string(cap));
  }
  const int n = rank_;
  std::vector<std::vector<int>> gens(n, std::vector<int>(n * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        gens[i][r * n + c] = (r == c ? 1 : 0) - datum.simple_root(i)[r] * datum.pairing()[c][i];
      }
    }
  }
  auto product = [n](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> m(n * n, 0);
    for (int r = 0; r < n; ++r) {
      for (int k = 0; k < n; ++k) {
        int x = a[r * n + k];
        if (!x) continue;
        for (int c = 0; c < n; ++c) m[r * n + c] += x * b[k * n + c];
      }
    }
    return m;
  };

  // Breadth-first search over right multiplication.
  std::vector<std::vector<int>> mats;
  std::vector<int> len;
  std::map<std::vector<int>, int> idx;
  std::vector<int> id(n * n, 0);
  for (int r = 0; r < n; ++r) id[r * n + r] = 1;
  mats.push_back(id);
  len.push_back(0);
  idx[id] = 0;
  for (std::size_t head = 0; head < mats.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      auto m = product(mats[head], gens[i]);
      if (idx.emplace(m, static_cast<int>(mats.size())).second) {
        mats.push_back(std::move(m));
        len.push_back(len[head] + 1);
      }
    }
  }
  const std::size_t total = mats.size();
  if (total != expected) {
    throw Error(ErrorCode::InvalidCartanType, "Weyl group enumeration found " +
                                                  std::to_string(total) + " elements, expected " +
                                                  std::to_string(expected));
  }
  std::vector<int> lft(total * n);
  for (std::size_t w = 0; w < total; ++w) {
    for (int i = 0; i < n; ++i) lft[w * n + i] = idx.at(product(gens[i], mats[w]));
  }
  // Canonical words: minimal left descent, then recurse (BFS order is by length).
  std::vector<std::vector<int>> wrd(total);
  for (std::size_t w = 1; w < total; ++w) {
    for (int i = 0; i < n; ++i) {
      int v = lft[w * n + i];
      if (len[v] < len[w]) {
        wrd[w] = {i};
        wrd[w].insert(wrd[w].end(), wrd[v].begin(), wrd[v].end());
        break;
      }
    }
  }
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return wrd[a] < wrd[b];
  });
  std::vector<int> pos(total);
  for (std::size_t k = 0; k < total; ++k) pos[order[k]] = static_cast<int>(k);

  words_.resize(total);
  length_.resize(total);
  matrices_.resize(total);
  left_.resize(total * n);
  for (std::size_t k = 0; k < total; ++k) {
    int old = order[k];
    words_[k] = std::move(wrd[old]);
    length_[k] = len[old];
    matrices_[k] = mats[old];
    index_[matrices_[k]] = static_cast<int>(k);
    for (int i = 0; i < n; ++i) left_[k * n + i] = pos[lft[old * n + i]];
  }
  right_.resize(total * n);
  for (std::size_t k = 0; k < total; ++k) {
    for (int i = 0; i < n; ++i) right_[k * n + i] = index_.at(product(matrices_[k], gens[i]));
  }
  inverse_.resize(total);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<int> rev(words_[k].rbegin(), words_[k].rend());
    inverse_[k] = from_word(rev);
  }

  root_image_.resize(total * nroots_);
  for (std::size_t k = 0; k < total; ++k) {
    for (std::size_t r = 0; r < nroots_; ++r) {
      Weight img = act(static_cast<int>(k), datum_.positive_roots()[r]);
      int p = datum_.root_index(img);
      if (p >= 0) {
        root_image_[k * nroots_ + r] = p + 1;
      } else {
        for (auto& x : img) x = -x;
        root_image_[k * nroots_ + r] = -(datum_.root_index(img) + 1);
      }
    }
  }

  // beta_r = v(alpha_i): s_beta = v s_i v^{-1}, <lambda, beta^vee> = <v^{-1} lambda, alpha_i^vee>.
  reflection_.assign(nroots_, -1);
  coroots_.assign(nroots_, std::vector<int>(n, 0));
  for (std::size_t k = 0; k < total; ++k) {
    for (int i = 0; i < n; ++i) {
      int img = root_image(static_cast<int>(k), i);
      if (img <= 0 || reflection_[img - 1] >= 0) continue;
      int r = img - 1;
      int v = static_cast<int>(k);
      reflection_[r] = mul(right(v, i), inverse(v));
      for (int j = 0; j < n; ++j) {
        coroots_[r][j] = datum_.pair(act(inverse(v), datum_.basis_weight(j)), i);
      }
    }
  }
}

int WeylGroup::mul(int a, int b) const {
  int w = a;
  for (int i : words_[b]) w = right(w, i);
  return w;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int w = 0;
  for (int i : word) {
    if (i < 0 || i >= rank_) throw Error(ErrorCode::InvalidArgument, "letter out of range");
    w = right(w, i);
  }
  return w;
}

int WeylGroup::find_matrix(const std::vector<int>& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

Weight WeylGroup::act(int w, const Weight& lambda) const {
  const auto& m = matrices_[w];
  Weight out(rank_, 0);
  for (int r = 0; r < rank_; ++r) {
    for (int c = 0; c < rank_; ++c) out[r] += m[r * rank_ + c] * lambda[c];
  }
  return out;
}

int WeylGroup::pair_coroot(const Weight& lambda, int r) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += lambda[j] * coroots_[r][j];
  return s;
}

bool WeylGroup::bruhat_le(int u, int w) const {
  while (true) {
    if (length_[u] > length_[w]) return false;
    if (w == 0) return u == 0;
    int i = words_[w].back();
    int us = right(u, i);
    if (length_[us] < length_[u]) u = us;
    w = right(w, i);
  }
}

std::vector<std::vector<int>> WeylGroup::reduced_words(int w, std::size_t limit) const {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  // Build words right to left; letters appended in reverse.
  auto rec = [&](auto&& self, int v) -> void {
    if (out.size() >= limit) return;
    if (v == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int i = 0; i < rank_; ++i) {
      if (!right_descent(v, i)) continue;
      suffix.push_back(i);
      self(self, right(v, i));
      suffix.pop_back();
    }
  };
  rec(rec, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> WeylGroup::poincare() const {
  std::vector<long long> p(max_length() + 1, 0);
  for (int l : length_) ++p[l];
  return p;
}

std::string WeylGroup::word_string(int w) const {
  std::string s;
  for (int i : words_[w]) s += std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

}  // namespace pushpull
