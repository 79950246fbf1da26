#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pushpull/ring.hpp"

namespace pushpull {

inline constexpr int kMaxVars = 8;

/// Precision value carried by polynomials that were never truncated.
inline constexpr int kExact = 1 << 28;

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte, so integer order on `bits` is lexicographic order and
/// multiplication is addition.
struct Monomial {
  std::uint64_t bits = 0;

  static Monomial variable(int j, int power = 1);
  static Monomial from_exponents(std::span<const int> exps);

  int exponent(int j) const { return static_cast<int>((bits >> (8 * (kMaxVars - 1 - j))) & 0xff); }
  int degree() const;
  bool divides(Monomial other) const;

  Monomial operator*(Monomial o) const { return Monomial{bits + o.bits}; }
  Monomial operator/(Monomial o) const { return Monomial{bits - o.bits}; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Truncated multivariate power series over an exact ring.
///
/// Every stored term has total degree <= precision(), and all terms up to
/// that degree are exact. Polynomials carry precision kExact and are never
/// truncated.
class Series {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Series(Ring ring, int nvars, int precision = kExact);

  static Series constant(Ring ring, int nvars, Scalar c, int precision = kExact);
  static Series variable(Ring ring, int nvars, int j, int precision = kExact);
  static Series from_terms(Ring ring, int nvars, std::vector<Term> terms,
                           int precision = kExact);

  const Ring& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  int precision() const { return precision_; }
  bool is_exact() const { return precision_ >= kExact; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(Monomial m) const;
  Scalar constant_term() const { return coeff(Monomial{}); }
  /// Lowest degree of a stored term; precision()+1 for a zero series.
  int valuation() const;
  int max_degree() const;

  Series homogeneous_part(int degree) const;
  Series truncated(int precision) const;

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scaled(Scalar c) const;
  Series times_monomial(Monomial m, Scalar c) const;
  Series pow(int e) const;
  /// Product truncated at `cap` (sharpening nothing, only dropping terms).
  Series mul_capped(const Series& o, int cap) const;

  /// Replace variable j by images[j]. All images share one variable count.
  /// Non-exact series require images without constant term.
  Series substitute(std::span<const Series> images) const;

  /// True when the difference vanishes up to the smaller precision.
  bool agrees_with(const Series& o) const;

  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.nvars_ == b.nvars_ && a.precision_ == b.precision_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Series& o) const;
  void canonicalize();

  Ring ring_;
  int nvars_;
  int precision_;
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

/// q with u = q*v, computed degree by degree with lex-leading-term division
/// of homogeneous parts. Throws NotDivisible when the remainder does not
/// vanish, PrecisionLoss when no degree of the quotient can be trusted.
Series exact_divide(const Series& u, const Series& v);

/// Power-series inverse of a series with unit constant term. Exact
/// polynomials that are not constants need an explicit precision cap.
Series invert_unit(const Series& u, int cap = kExact);

}  // namespace pushpull
