#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace bqtop {

using BigInt = mpz_class;
using Rational = mpq_class;

/// A coefficient of the base field: either an exact rational or a residue
/// modulo a prime. Rationals combine with residues by reduction, so literal
/// constants (0, 1, -1) can be written once for both fields.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT: implicit on purpose for literals
  explicit Scalar(Rational q) : q_(std::move(q)) { q_.canonicalize(); }
  static Scalar residue(std::uint64_t value, std::uint64_t modulus);

  bool is_zero() const { return modulus_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return modulus_ == 0 ? q_ == 1 : r_ == 1 % modulus_; }
  bool is_residue() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t residue_value() const { return r_; }
  const Rational& rational() const { return q_; }

  /// Reduce into F_p; throws std::domain_error when the denominator vanishes mod p.
  Scalar reduced(std::uint64_t modulus) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void unify(Scalar& o);

  Rational q_{0};
  std::uint64_t r_ = 0;
  std::uint64_t modulus_ = 0;  // 0 means rational
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The coefficient field k of the algebra: Q or F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  Scalar zero() const { return from(Rational(0)); }
  Scalar one() const { return from(Rational(1)); }
  Scalar from(const Rational& q) const;
  Scalar from(const Scalar& s) const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace bqtop
