#include "pushpull/ring.hpp"

#include <numeric>

namespace pushpull {

namespace {

bool is_prime(Scalar n) {
  if (n < 2) return false;
  for (Scalar d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Extended Euclid on non-negative inputs; returns gcd and x with a*x = g mod m.
Scalar inverse_mod(Scalar a, Scalar m, Scalar& g) {
  __int128 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  g = static_cast<Scalar>(old_r);
  __int128 x = old_s % m;
  if (x < 0) x += m;
  return static_cast<Scalar>(x);
}

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("integer overflow in ") + op);
}

}  // namespace

Ring Ring::integers_mod(Scalar m) {
  if (m < 2 || m > (Scalar{1} << 31)) {
    throw Error(ErrorCode::InvalidArgument, "modulus must lie in [2, 2^31]");
  }
  return Ring(is_prime(m) ? Kind::PrimeField : Kind::IntegersMod, m);
}

Ring Ring::prime_field(Scalar p) {
  if (!is_prime(p) || p > (Scalar{1} << 31)) {
    throw Error(ErrorCode::InvalidArgument,
                "prime field requires a prime below 2^31, got " + std::to_string(p));
  }
  return Ring(Kind::PrimeField, p);
}

Scalar Ring::normalize(Scalar a) const {
  if (kind_ == Kind::Integers) return a;
  Scalar r = a % modulus_;
  return r < 0 ? r + modulus_ : r;
}

Scalar Ring::add(Scalar a, Scalar b) const {
  if (kind_ == Kind::Integers) {
    Scalar r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
  }
  Scalar r = a + b;
  return r >= modulus_ ? r - modulus_ : r;
}

Scalar Ring::sub(Scalar a, Scalar b) const {
  if (kind_ == Kind::Integers) {
    Scalar r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
    return r;
  }
  Scalar r = a - b;
  return r < 0 ? r + modulus_ : r;
}

Scalar Ring::mul(Scalar a, Scalar b) const {
  if (kind_ == Kind::Integers) {
    Scalar r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
  }
  return static_cast<Scalar>((static_cast<__int128>(a) * b) % modulus_);
}

Scalar Ring::neg(Scalar a) const {
  if (kind_ == Kind::Integers) {
    if (a == INT64_MIN) overflow("neg");
    return -a;
  }
  return a == 0 ? 0 : modulus_ - a;
}

bool Ring::is_unit(Scalar a) const {
  if (kind_ == Kind::Integers) return a == 1 || a == -1;
  if (a == 0) return false;
  return std::gcd(a, modulus_) == 1;
}

Scalar Ring::inverse(Scalar a) const {
  if (kind_ == Kind::Integers) {
    if (a == 1 || a == -1) return a;
    throw Error(ErrorCode::NotAUnit, std::to_string(a) + " is not a unit in Z");
  }
  Scalar g = 0;
  Scalar x = inverse_mod(normalize(a), modulus_, g);
  if (g != 1) {
    throw Error(ErrorCode::NotAUnit,
                std::to_string(a) + " is not a unit in " + name());
  }
  return x;
}

bool Ring::divides(Scalar b, Scalar a) const {
  if (kind_ == Kind::Integers) {
    if (b == 0) return a == 0;
    return a % b == 0;
  }
  if (a == 0) return true;
  if (b == 0) return false;
  Scalar g = std::gcd(normalize(b), modulus_);
  return normalize(a) % g == 0;
}

Scalar Ring::exact_div(Scalar a, Scalar b) const {
  if (kind_ == Kind::Integers) {
    if (b == 0 || a % b != 0) {
      throw Error(ErrorCode::NotDivisible,
                  std::to_string(a) + " is not divisible by " + std::to_string(b));
    }
    if (a == INT64_MIN && b == -1) overflow("div");
    return a / b;
  }
  if (is_unit(b)) return mul(a, inverse(b));
  // Z/m with a zero-divisor b: solve b*q = a by dividing out the gcd.
  Scalar bn = normalize(b), an = normalize(a);
  Scalar g = std::gcd(bn, modulus_);
  if (g == 0 || an % g != 0) {
    throw Error(ErrorCode::NotDivisible,
                std::to_string(a) + " is not divisible by " + std::to_string(b) +
                    " in " + name());
  }
  Scalar m2 = modulus_ / g;
  Scalar g2 = 0;
  Scalar inv = inverse_mod((bn / g) % m2, m2, g2);
  return static_cast<Scalar>((static_cast<__int128>(an / g) * inv) % m2);
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::IntegersMod: return "Z/" + std::to_string(modulus_);
    case Kind::PrimeField: return "F_" + std::to_string(modulus_);
  }
  return "?";
}

Scalar Ring::parse(const std::string& text) const {
  std::size_t used = 0;
  Scalar value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
  }
  if (used != text.size()) {
    throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
  }
  return normalize(value);
}

}  // namespace pushpull
