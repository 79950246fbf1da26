#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "pushpull/series.hpp"

namespace pushpull {

/// One-dimensional commutative formal group law F(u,v) = sum a_ij u^i v^j,
/// known up to total degree trunc().
class FormalGroupLaw {
 public:
  enum class Kind { Additive, Multiplicative, Hyperbolic, Custom };

  static FormalGroupLaw additive(Ring ring, int trunc);
  static FormalGroupLaw multiplicative(Ring ring, Scalar beta, int trunc);
  static FormalGroupLaw hyperbolic(Ring ring, Scalar mu1, Scalar mu2, int trunc);
  /// Table entries (i, j, a_ij); missing entries are zero. Validated.
  static FormalGroupLaw custom(Ring ring, int trunc, const std::vector<std::array<Scalar, 3>>& table);
  /// {"trunc": d, "coeffs": [[i, j, "c"], ...]}
  static FormalGroupLaw from_json(Ring ring, const nlohmann::json& doc);

  Kind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }
  int trunc() const { return trunc_; }
  const std::vector<Scalar>& params() const { return params_; }
  std::string kind_name() const;
  /// Stable description used in cache keys and reports, e.g. "mult(1)".
  std::string label() const;

  /// Additive law only: every computation stays polynomial and homogeneous.
  bool graded_exact() const { return kind_ == Kind::Additive; }

  Scalar coeff(int i, int j) const;

  /// F(u,v) as a two-variable series (exact for additive and multiplicative).
  const Series& law() const { return law_; }
  /// G(u,v) with F(u,v) = u + v + uv G(u,v).
  const Series& correction() const { return correction_; }
  /// iota(x) in one variable, F(x, iota(x)) = 0.
  const Series& inverse_series() const { return inverse_; }
  /// g(x) with iota(x) = x g(x); constant term -1, hence a unit.
  const Series& inverse_cofactor() const { return cofactor_; }

  Series formal_sum(const Series& a, const Series& b) const;
  Series formal_inverse(const Series& s) const;
  /// G(a, b) for series without constant term.
  Series correction_at(const Series& a, const Series& b) const;

  /// Throws FGLAxiomViolation naming the first failed axiom and its degree.
  void validate() const;

  nlohmann::json to_json() const;

 private:
  FormalGroupLaw(Ring ring, int trunc, Kind kind, std::vector<Scalar> params, Series law);
  void derive();

  Ring ring_;
  int trunc_;
  Kind kind_;
  std::vector<Scalar> params_;
  Series law_;
  Series correction_;
  Series inverse_;
  Series cofactor_;
};

}  // namespace pushpull
