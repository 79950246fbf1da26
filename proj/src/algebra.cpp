#include "pushpull/algebra.hpp"

#include <random>
#include <stdexcept>

#include "pushpull/error.hpp"

namespace pushpull {

using fp::Field;
using fp::Matrix;
using fp::u32;
using fp::u64;

BlockOp block_identity(const std::vector<int>& dims) {
  BlockOp out;
  for (int d : dims) out.push_back(Matrix::identity(d));
  return out;
}

BlockOp block_zero(const std::vector<int>& dims) {
  BlockOp out;
  for (int d : dims) out.emplace_back(d, d);
  return out;
}

BlockOp block_mul(const Field& f, const BlockOp& a, const BlockOp& b) {
  BlockOp out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(fp::mul(f, a[k], b[k]));
  return out;
}

BlockOp block_add(const Field& f, const BlockOp& a, const BlockOp& b) {
  BlockOp out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(fp::add(f, a[k], b[k]));
  return out;
}

BlockOp block_sub(const Field& f, const BlockOp& a, const BlockOp& b) {
  BlockOp out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(fp::sub(f, a[k], b[k]));
  return out;
}

BlockOp block_scale(const Field& f, u32 c, const BlockOp& a) {
  BlockOp out;
  for (const auto& m : a) out.push_back(fp::scale(f, c, m));
  return out;
}

bool block_is_zero(const BlockOp& a) {
  for (const auto& m : a) {
    if (!m.is_zero()) return false;
  }
  return true;
}

std::vector<u32> block_flatten(const BlockOp& a) {
  std::vector<u32> v;
  for (const auto& m : a) v.insert(v.end(), m.a.begin(), m.a.end());
  return v;
}

BlockOp block_unflatten(const std::vector<int>& dims, const std::vector<u32>& v) {
  BlockOp out;
  std::size_t at = 0;
  for (int d : dims) {
    Matrix m(d, d);
    std::copy(v.begin() + static_cast<std::ptrdiff_t>(at),
              v.begin() + static_cast<std::ptrdiff_t>(at + m.a.size()), m.a.begin());
    at += m.a.size();
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<long long> block_ranks(const Field& f, const BlockOp& a) {
  std::vector<long long> out;
  for (const auto& m : a) out.push_back(fp::rank(f, m));
  return out;
}

BlockOp block_poly_eval(const Field& f, const fp::Poly& p, const BlockOp& a, const BlockOp& unit) {
  BlockOp r = block_scale(f, 0, unit);
  for (std::size_t k = p.size(); k-- > 0;) {
    r = block_add(f, block_mul(f, r, a), block_scale(f, p[k], unit));
  }
  return r;
}

Matrix block_assemble(const BlockOp& a, const std::vector<std::vector<int>>& blocks, std::size_t n) {
  Matrix out(static_cast<int>(n), static_cast<int>(n));
  for (std::size_t d = 0; d < blocks.size(); ++d) {
    const auto& idx = blocks[d];
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) {
        out.at(idx[i], idx[j]) = a[d].at(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

namespace {

std::size_t total_entries(const std::vector<int>& dims) {
  std::size_t n = 0;
  for (int d : dims) n += static_cast<std::size_t>(d) * d;
  return n;
}

}  // namespace

MatrixAlgebra::MatrixAlgebra(Field f, std::vector<int> dims)
    : f_(f), dims_(std::move(dims)), unit_(block_identity(dims_)), span_(f, total_entries(dims_)) {}

bool MatrixAlgebra::contains(const BlockOp& a) const { return span_.contains(block_flatten(a)); }

bool MatrixAlgebra::add(const BlockOp& a) {
  if (!span_.insert(block_flatten(a))) return false;
  basis_.push_back(a);
  return true;
}

MatrixAlgebra MatrixAlgebra::generated_by(Field f, std::vector<int> dims,
                                          const std::vector<BlockOp>& gens, std::size_t max_dim) {
  MatrixAlgebra alg(f, std::move(dims));
  alg.add(alg.unit_);
  for (std::size_t k = 0; k < alg.basis_.size(); ++k) {
    for (const auto& g : gens) {
      BlockOp x = block_mul(f, alg.basis_[k], g);
      if (alg.add(x) && alg.basis_.size() > max_dim) {
        throw Error(ErrorCode::ClosureBudgetExceeded,
                    "algebra closure passed dimension " + std::to_string(max_dim));
      }
    }
  }
  return alg;
}

bool MatrixAlgebra::is_closed() const {
  for (const auto& a : basis_) {
    for (const auto& b : basis_) {
      if (!contains(block_mul(f_, a, b))) return false;
    }
  }
  return true;
}

namespace {

// Tr(lift(z)^(p^i)) mod p^(i+1), divided by p^i.
u32 trace_power_digit(const Field& f, const BlockOp& z, int i) {
  u64 p = f.p;
  u64 pi = 1;
  for (int k = 0; k < i; ++k) pi *= p;
  const u64 q = pi * p;
  u64 total = 0;
  for (const auto& m : z) {
    const int n = m.rows;
    if (n == 0) continue;
    std::vector<u64> cur(m.a.begin(), m.a.end());
    auto mulmod = [&](const std::vector<u64>& x, const std::vector<u64>& y) {
      std::vector<u64> r(static_cast<std::size_t>(n) * n, 0);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          u64 xv = x[static_cast<std::size_t>(a) * n + b];
          if (!xv) continue;
          for (int c = 0; c < n; ++c) {
            auto& slot = r[static_cast<std::size_t>(a) * n + c];
            slot = (slot + xv * y[static_cast<std::size_t>(b) * n + c]) % q;
          }
        }
      }
      return r;
    };
    for (int k = 0; k < i; ++k) {
      // cur <- cur^p
      std::vector<u64> acc = cur;
      for (u64 e = 1; e < p; ++e) acc = mulmod(acc, cur);
      cur = std::move(acc);
    }
    for (int a = 0; a < n; ++a) total = (total + cur[static_cast<std::size_t>(a) * n + a]) % q;
  }
  if (total % pi != 0) {
    throw std::logic_error("radical: trace not divisible by p^i");
  }
  return static_cast<u32>((total / pi) % p);
}

}  // namespace

std::vector<BlockOp> radical(const MatrixAlgebra& alg) {
  const Field& f = alg.field();
  int n = 0;
  for (int d : alg.dims()) n += d;
  int levels = 0;
  for (long long q = f.p; q <= n; q *= f.p) ++levels;

  std::vector<BlockOp> ideal = alg.basis();
  for (int i = 0; i <= levels && !ideal.empty(); ++i) {
    Matrix g(static_cast<int>(alg.dim()), static_cast<int>(ideal.size()));
    for (std::size_t m = 0; m < alg.dim(); ++m) {
      for (std::size_t k = 0; k < ideal.size(); ++k) {
        g.at(static_cast<int>(m), static_cast<int>(k)) =
            trace_power_digit(f, block_mul(f, ideal[k], alg.basis()[m]), i);
      }
    }
    Matrix ker = fp::nullspace(f, g);
    std::vector<BlockOp> next;
    for (int r = 0; r < ker.rows; ++r) {
      BlockOp x = block_zero(alg.dims());
      for (std::size_t k = 0; k < ideal.size(); ++k) {
        u32 c = ker.at(r, static_cast<int>(k));
        if (c) x = block_add(f, x, block_scale(f, c, ideal[k]));
      }
      next.push_back(std::move(x));
    }
    ideal = std::move(next);
  }
  return ideal;
}

bool is_nilpotent_ideal(const MatrixAlgebra& alg, const std::vector<BlockOp>& ideal) {
  const Field& f = alg.field();
  std::size_t len = alg.entry_count();
  fp::RowSpace span(f, len);
  for (const auto& x : ideal) span.insert(block_flatten(x));
  for (const auto& x : ideal) {
    for (const auto& a : alg.basis()) {
      if (!span.contains(block_flatten(block_mul(f, x, a)))) return false;
      if (!span.contains(block_flatten(block_mul(f, a, x)))) return false;
    }
  }
  // J^k: repeatedly multiply a spanning set by J until it vanishes.
  std::vector<BlockOp> power = ideal;
  for (std::size_t step = 0; step <= len + 1; ++step) {
    if (power.empty()) return true;
    fp::RowSpace next_span(f, len);
    std::vector<BlockOp> next;
    for (const auto& x : power) {
      for (const auto& y : ideal) {
        BlockOp z = block_mul(f, x, y);
        if (next_span.insert(block_flatten(z))) next.push_back(std::move(z));
      }
    }
    power = std::move(next);
  }
  return power.empty();
}

fp::Poly algebra_minpoly(const Field& f, const BlockOp& a, const BlockOp& unit) {
  fp::RowSpace span(f, block_flatten(unit).size(), true);
  BlockOp power = unit;
  for (int k = 0;; ++k) {
    std::vector<u32> v = block_flatten(power);
    std::vector<u32> coords;
    if (span.coordinates(v, coords)) {
      fp::Poly m(k + 1, 0);
      for (int j = 0; j < k; ++j) m[j] = f.neg(coords[j]);
      m[k] = 1;
      return m;
    }
    span.insert(std::move(v));
    power = block_mul(f, power, a);
  }
}

namespace {

std::vector<BlockOp> corner_basis(const Field& f, const BlockOp& e, const std::vector<BlockOp>& elems,
                                  std::size_t len) {
  fp::RowSpace span(f, len);
  std::vector<BlockOp> out;
  for (const auto& b : elems) {
    BlockOp x = block_mul(f, block_mul(f, e, b), e);
    if (span.insert(block_flatten(x))) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

IdempotentResult primitive_idempotents(const MatrixAlgebra& alg, const std::vector<BlockOp>& rad,
                                       const IdempotentSearch& search) {
  const Field& f = alg.field();
  std::mt19937_64 rng(search.seed);
  IdempotentResult result;
  std::vector<BlockOp> work{alg.unit()};
  while (!work.empty()) {
    BlockOp e = std::move(work.back());
    work.pop_back();
    auto corner = corner_basis(f, e, alg.basis(), alg.entry_count());
    auto corner_rad = corner_basis(f, e, rad, alg.entry_count());
    const int quotient_dim = static_cast<int>(corner.size() - corner_rad.size());

    std::vector<BlockOp> fallback;
    for (const auto& b : corner) fallback.push_back(b);
    for (std::size_t k = 0; k < corner.size(); ++k) {
      for (std::size_t l = k + 1; l < corner.size(); ++l) {
        fallback.push_back(block_add(f, corner[k], corner[l]));
      }
    }

    bool done = false;
    int tries = 0;
    const int total = search.random_budget + static_cast<int>(fallback.size());
    for (; tries < total && !done; ++tries) {
      BlockOp a;
      if (tries < search.random_budget) {
        a = block_scale(f, 0, e);
        for (const auto& b : corner) a = block_add(f, a, block_scale(f, static_cast<u32>(rng() % f.p), b));
        ++result.random_elements;
      } else {
        a = fallback[tries - search.random_budget];
        ++result.fallback_elements;
      }
      fp::Poly m = algebra_minpoly(f, a, e);
      auto factors = fp::factor(f, m, rng);
      if (factors.size() >= 2) {
        fp::Poly g{1};
        for (int k = 0; k < factors[0].second; ++k) g = fp::poly_mul(f, g, factors[0].first);
        fp::Poly h = fp::poly_divmod(f, m, g).first;
        // u = 1 mod g, u = 0 mod h
        fp::Poly u = fp::poly_mod(f, fp::poly_mul(f, h, fp::poly_inverse_mod(f, h, g)), m);
        BlockOp e1 = block_poly_eval(f, u, a, e);
        BlockOp e2 = block_sub(f, e, e1);
        work.push_back(std::move(e2));
        work.push_back(std::move(e1));
        done = true;
      } else if (fp::degree(factors[0].first) == quotient_dim) {
        result.idempotents.push_back(e);
        done = true;
      }
    }
    if (!done) {
      throw Error(ErrorCode::SplitBudgetExceeded,
                  "no splitting or primitivity certificate within " + std::to_string(total) +
                      " elements");
    }
  }
  return result;
}

}  // namespace pushpull
