#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "noname/exact/rational.hpp"

namespace noname::exact {

/// Deterministic trial division up to sqrt(p).
bool is_prime(std::uint64_t p);

/// Identifies the coefficient field: the rationals or F_p.
class BaseField {
 public:
  static BaseField rationals() { return BaseField(0); }
  /// Throws Error(usage) unless p is prime.
  static BaseField prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  friend bool operator==(const BaseField&, const BaseField&) = default;

  std::string to_string() const;

 private:
  friend class Scalar;
  explicit BaseField(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Residue class modulo a prime, kept in [0, p).
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t residue, std::uint64_t p);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return p_; }

  PrimeFieldElement operator-() const;
  PrimeFieldElement operator+(const PrimeFieldElement& rhs) const;
  PrimeFieldElement operator-(const PrimeFieldElement& rhs) const;
  PrimeFieldElement operator*(const PrimeFieldElement& rhs) const;
  PrimeFieldElement operator/(const PrimeFieldElement& rhs) const;
  PrimeFieldElement inverse() const;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

 private:
  std::uint64_t residue_;
  std::uint64_t p_;
};

/// A value of a BaseField. Mixing bases is a usage error.
class Scalar {
 public:
  Scalar() : value_(Rational()) {}
  Scalar(Rational q) : value_(std::move(q)) {}        // NOLINT(google-explicit-constructor)
  Scalar(PrimeFieldElement r) : value_(r) {}          // NOLINT(google-explicit-constructor)

  static Scalar zero(const BaseField& base) { return from_int(base, 0); }
  static Scalar one(const BaseField& base) { return from_int(base, 1); }
  static Scalar from_int(const BaseField& base, long value);
  /// Maps a rational into the base; over F_p the denominator must be a unit.
  static Scalar from_rational(const BaseField& base, const Rational& value);

  BaseField base() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const PrimeFieldElement& as_residue() const { return std::get<PrimeFieldElement>(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  /// Rationals as "n" or "n/d"; residues as their representative in [0, p).
  std::string to_string() const;
  /// Residues printed in (-p/2, p/2] so that p-1 reads as -1.
  std::string to_signed_string() const;

 private:
  void check_same_base(const Scalar& rhs) const;
  std::variant<Rational, PrimeFieldElement> value_;
};

}  // namespace noname::exact
