#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pushpull::fp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Field {
  u32 p = 2;

  u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p ? s - p : s; }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 neg(u32 a) const { return a ? p - a : 0; }
  u32 mul(u32 a, u32 b) const { return static_cast<u32>(static_cast<u64>(a) * b % p); }
  u32 pow(u32 a, u64 e) const;
  u32 inv(u32 a) const;
  u32 from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<u32>(r < 0 ? r + p : r);
  }
};

/// Dense row-major matrix over F_p.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<u32> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static Matrix identity(int n);

  u32& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  u32 at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool is_zero() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mul(const Field& f, const Matrix& x, const Matrix& y);
Matrix add(const Field& f, const Matrix& x, const Matrix& y);
Matrix sub(const Field& f, const Matrix& x, const Matrix& y);
Matrix scale(const Field& f, u32 c, const Matrix& x);
Matrix transpose(const Matrix& x);
int rank(const Field& f, Matrix x);
/// Inverse of a square matrix; throws InvalidArgument when singular.
Matrix inverse(const Field& f, const Matrix& x);
/// Basis of {v : x v = 0}, one vector per row.
Matrix nullspace(const Field& f, const Matrix& x);
/// Matrix applied to a column vector.
std::vector<u32> apply(const Field& f, const Matrix& x, const std::vector<u32>& v);

/// Incrementally built basis of a subspace of F_p^len in echelon form.
class RowSpace {
 public:
  RowSpace(Field f, std::size_t len, bool track = false) : f_(f), len_(len), track_(track) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return len_; }
  const std::vector<std::vector<u32>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v in place against the basis.
  void reduce(std::vector<u32>& v) const;
  bool contains(std::vector<u32> v) const;
  /// Adds v if independent; returns true when the dimension grew.
  bool insert(std::vector<u32> v);
  /// Coordinates of v in terms of the inserted independent vectors (needs
  /// tracking); false if v is outside the span.
  bool coordinates(std::vector<u32> v, std::vector<u32>& coords) const;

 private:
  Field f_;
  std::size_t len_;
  std::vector<std::vector<u32>> rows_;
  std::vector<std::size_t> pivots_;
  bool track_;
  // rows_[k] expressed in the inserted vectors, for coordinates().
  std::vector<std::vector<u32>> combos_;
};

/// Polynomials, coefficients from degree 0 upwards, no trailing zeros.
using Poly = std::vector<u32>;

int degree(const Poly& a);
Poly poly_trim(Poly a);
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_mod(const Field& f, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& f, Poly a, Poly b);
Poly poly_monic(const Field& f, const Poly& a);
Poly poly_powmod(const Field& f, Poly base, u64 e, const Poly& m);
Poly poly_derivative(const Field& f, const Poly& a);
/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<Poly, int>> factor(const Field& f, const Poly& a, std::mt19937_64& rng);
/// Extended gcd: returns g and s with s*a = g mod b.
Poly poly_inverse_mod(const Field& f, const Poly& a, const Poly& m);

Matrix poly_eval(const Field& f, const Poly& p, const Matrix& x);
Poly charpoly(const Field& f, const Matrix& x);
Poly minpoly(const Field& f, const Matrix& x);

}  // namespace pushpull::fp
