#pragma once

#include <cstdint>
#include <string>

#include "pushpull/error.hpp"

namespace pushpull {

using Scalar = std::int64_t;

/// Exact coefficient ring: the integers, Z/m, or a prime field F_p.
/// Residues are stored in [0, m). Integer arithmetic is overflow-checked.
class Ring {
 public:
  enum class Kind { Integers, IntegersMod, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring integers_mod(Scalar m);
  static Ring prime_field(Scalar p);

  Kind kind() const noexcept { return kind_; }
  Scalar modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ == Kind::PrimeField; }

  Scalar normalize(Scalar a) const;
  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;

  bool is_unit(Scalar a) const;
  Scalar inverse(Scalar a) const;  // throws NotAUnit

  /// q with q*b == a, or throws NotDivisible.
  Scalar exact_div(Scalar a, Scalar b) const;
  bool divides(Scalar b, Scalar a) const;

  std::string name() const;
  Scalar parse(const std::string& text) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind kind, Scalar modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  Scalar modulus_;
};

}  // namespace pushpull
