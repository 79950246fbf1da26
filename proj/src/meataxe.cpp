#include "pushpull/meataxe.hpp"

#include "pushpull/error.hpp"

namespace pushpull {

using fp::Field;
using fp::Matrix;
using fp::u32;

namespace {

std::vector<u32> row(const Matrix& m, int r) {
  return std::vector<u32>(m.a.begin() + static_cast<std::ptrdiff_t>(r) * m.cols,
                          m.a.begin() + static_cast<std::ptrdiff_t>(r + 1) * m.cols);
}

std::vector<u32> column(const Matrix& m, int c) {
  std::vector<u32> v(m.rows);
  for (int r = 0; r < m.rows; ++r) v[r] = m.at(r, c);
  return v;
}

}  // namespace

Matrix evaluate(const Field& f, const Recipe& r, const Module& m) {
  Matrix out(m.dim, m.dim);
  for (const auto& [c, word] : r.terms) {
    Matrix w = Matrix::identity(m.dim);
    for (int g : word) w = fp::mul(f, w, m.gens[g]);
    out = fp::add(f, out, fp::scale(f, c, w));
  }
  return out;
}

Spin spin(const Field& f, const std::vector<Matrix>& gens,
          const std::vector<std::vector<u32>>& seeds) {
  const std::size_t n = seeds.empty() ? 0 : seeds.front().size();
  Spin s{fp::RowSpace(f, n), {}, {}};
  for (const auto& v : seeds) {
    if (s.span.insert(v)) s.basis.push_back(v);
  }
  for (std::size_t k = 0; k < s.basis.size() && s.basis.size() < n; ++k) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto w = fp::apply(f, gens[g], s.basis[k]);
      if (s.span.insert(w)) {
        s.basis.push_back(std::move(w));
        s.words.emplace_back(static_cast<int>(g), static_cast<int>(k));
      }
    }
  }
  return s;
}

Module submodule(const Field& f, const Module& m, const std::vector<std::vector<u32>>& basis) {
  fp::RowSpace span(f, m.dim, true);
  for (const auto& v : basis) span.insert(v);
  const int k = static_cast<int>(span.dim());
  Module out{k, {}};
  for (const auto& g : m.gens) {
    Matrix sub(k, k);
    int col = 0;
    for (const auto& v : basis) {
      std::vector<u32> coords;
      if (!span.coordinates(fp::apply(f, g, v), coords)) {
        throw Error(ErrorCode::InvalidArgument, "subspace is not invariant");
      }
      for (int r = 0; r < k; ++r) sub.at(r, col) = coords[r];
      ++col;
    }
    out.gens.push_back(std::move(sub));
  }
  return out;
}

Module quotient(const Field& f, const Module& m, const std::vector<std::vector<u32>>& basis) {
  fp::RowSpace span(f, m.dim);
  for (const auto& v : basis) span.insert(v);
  std::vector<bool> pivot(m.dim, false);
  for (auto p : span.pivots()) pivot[p] = true;
  std::vector<int> free;
  for (int c = 0; c < m.dim; ++c) {
    if (!pivot[c]) free.push_back(c);
  }
  const int q = static_cast<int>(free.size());
  Module out{q, {}};
  for (const auto& g : m.gens) {
    Matrix qm(q, q);
    for (int c = 0; c < q; ++c) {
      auto v = column(g, free[c]);
      span.reduce(v);
      for (int r = 0; r < q; ++r) qm.at(r, c) = v[free[r]];
    }
    out.gens.push_back(std::move(qm));
  }
  return out;
}

namespace {

Recipe random_recipe(const Field& f, int ngens, std::mt19937_64& rng) {
  Recipe r;
  const int nterms = 2 + static_cast<int>(rng() % 3);
  for (int t = 0; t < nterms; ++t) {
    const int len = 1 + static_cast<int>(rng() % 3);
    std::vector<int> word;
    for (int k = 0; k < len; ++k) word.push_back(static_cast<int>(rng() % ngens));
    r.terms.emplace_back(1 + static_cast<u32>(rng() % (f.p - 1)), std::move(word));
  }
  return r;
}

std::vector<Recipe> fallback_recipes(int ngens) {
  std::vector<Recipe> out;
  for (int g = 0; g < ngens; ++g) out.push_back({{{1, {g}}}});
  for (int g = 0; g < ngens; ++g) {
    for (int h = g + 1; h < ngens; ++h) out.push_back({{{1, {g}}, {1, {h}}}});
  }
  for (int g = 0; g < ngens; ++g) {
    for (int h = 0; h < ngens; ++h) out.push_back({{{1, {g, h}}}});
  }
  return out;
}

struct Outcome {
  bool split = false;
  std::vector<std::vector<u32>> sub;  // proper nonzero submodule when split
  IrreducibleModule irreducible;
};

IrreducibleModule standard_form(const Field& f, const Module& m, const Recipe& r,
                                const fp::Poly& factor, const Spin& s) {
  const int n = m.dim;
  Matrix b(n, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) b.at(i, k) = s.basis[k][i];
  }
  Matrix binv = fp::inverse(f, b);
  IrreducibleModule out;
  out.module.dim = n;
  for (const auto& g : m.gens) out.module.gens.push_back(fp::mul(f, binv, fp::mul(f, g, b)));
  out.element = r;
  out.factor = factor;
  out.spin = s.words;
  return out;
}

// One attempt with a given element: a proper submodule, an irreducibility
// certificate, or nothing.
bool try_element(const Field& f, const Module& m, const std::vector<Matrix>& transposed,
                 const Recipe& r, std::mt19937_64& rng, Outcome& out) {
  Matrix a = evaluate(f, r, m);
  auto factors = fp::factor(f, fp::charpoly(f, a), rng);
  for (const auto& [p, mult] : factors) {
    Matrix pa = fp::poly_eval(f, p, a);
    Matrix ker = fp::nullspace(f, pa);
    Spin s = spin(f, m.gens, {row(ker, 0)});
    if (static_cast<int>(s.basis.size()) < m.dim) {
      out.split = true;
      out.sub = std::move(s.basis);
      return true;
    }
    if (ker.rows != fp::degree(p)) continue;
    Matrix kt = fp::nullspace(f, fp::transpose(pa));
    Spin d = spin(f, transposed, {row(kt, 0)});
    if (static_cast<int>(d.basis.size()) < m.dim) {
      Matrix w(static_cast<int>(d.basis.size()), m.dim);
      for (std::size_t k = 0; k < d.basis.size(); ++k) {
        for (int c = 0; c < m.dim; ++c) w.at(static_cast<int>(k), c) = d.basis[k][c];
      }
      Matrix ann = fp::nullspace(f, w);
      out.split = true;
      out.sub.clear();
      for (int k = 0; k < ann.rows; ++k) out.sub.push_back(row(ann, k));
      return true;
    }
    out.split = false;
    out.irreducible = standard_form(f, m, r, p, s);
    return true;
  }
  return false;
}

}  // namespace

std::vector<IrreducibleModule> composition_factors(const Field& f, const Module& m,
                                                   std::mt19937_64& rng, int budget,
                                                   MeataxeStats* stats) {
  std::vector<IrreducibleModule> out;
  std::vector<Module> work{m};
  while (!work.empty()) {
    Module cur = std::move(work.back());
    work.pop_back();
    if (cur.dim == 0) continue;
    if (cur.dim == 1) {
      IrreducibleModule irr;
      irr.module = cur;
      irr.factor = {0, 1};
      out.push_back(std::move(irr));
      continue;
    }
    std::vector<Matrix> transposed;
    for (const auto& g : cur.gens) transposed.push_back(fp::transpose(g));
    const int ngens = static_cast<int>(cur.gens.size());
    auto fallback = ngens > 0 ? fallback_recipes(ngens) : std::vector<Recipe>{Recipe{}};
    Outcome oc;
    bool decided = false;
    for (int t = 0; t < budget && !decided; ++t) {
      Recipe r = ngens > 0 ? random_recipe(f, ngens, rng) : Recipe{};
      if (stats) ++stats->elements;
      decided = try_element(f, cur, transposed, r, rng, oc);
    }
    for (std::size_t t = 0; t < fallback.size() && !decided; ++t) {
      if (stats) ++stats->fallback_elements;
      decided = try_element(f, cur, transposed, fallback[t], rng, oc);
    }
    if (!decided) {
      throw Error(ErrorCode::SplitBudgetExceeded,
                  "module of dimension " + std::to_string(cur.dim) +
                      " neither split nor certified irreducible");
    }
    if (oc.split) {
      work.push_back(quotient(f, cur, oc.sub));
      work.push_back(submodule(f, cur, oc.sub));
    } else {
      out.push_back(std::move(oc.irreducible));
    }
  }
  return out;
}

bool may_be_isomorphic(const Field& f, const IrreducibleModule& s, const Module& t) {
  if (s.module.dim != t.dim) return false;
  Matrix pa = fp::poly_eval(f, s.factor, evaluate(f, s.element, t));
  return t.dim - fp::rank(f, pa) == fp::degree(s.factor);
}

int hom_dimension(const Field& f, const IrreducibleModule& s, const Module& t) {
  const Module& sm = s.module;
  Matrix ker = fp::nullspace(f, fp::poly_eval(f, s.factor, evaluate(f, s.element, t)));
  if (ker.rows == 0) return 0;
  const int ns = sm.dim;
  const std::size_t len = sm.gens.size() * static_cast<std::size_t>(ns) * t.dim;
  fp::RowSpace conditions(f, len);
  for (int l = 0; l < ker.rows; ++l) {
    // images of the standard basis under phi with phi(seed) = ker row l
    std::vector<std::vector<u32>> img{row(ker, l)};
    for (const auto& [g, parent] : s.spin) img.push_back(fp::apply(f, t.gens[g], img[parent]));
    std::vector<u32> cond;
    cond.reserve(len);
    for (std::size_t g = 0; g < sm.gens.size(); ++g) {
      for (int mcol = 0; mcol < ns; ++mcol) {
        auto lhs = fp::apply(f, t.gens[g], img[mcol]);
        for (int nrow = 0; nrow < ns; ++nrow) {
          u32 c = sm.gens[g].at(nrow, mcol);
          if (!c) continue;
          for (int i = 0; i < t.dim; ++i) lhs[i] = f.sub(lhs[i], f.mul(c, img[nrow][i]));
        }
        cond.insert(cond.end(), lhs.begin(), lhs.end());
      }
    }
    conditions.insert(std::move(cond));
  }
  return ker.rows - static_cast<int>(conditions.dim());
}

}  // namespace pushpull
