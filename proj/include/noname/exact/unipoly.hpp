#pragma once

#include <string>
#include <utility>
#include <vector>

#include "noname/exact/scalar.hpp"

namespace noname::exact {

/// Univariate polynomial over a BaseField, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
 public:
  explicit UniPoly(BaseField base) : base_(base) {}
  UniPoly(BaseField base, std::vector<Scalar> coefficients);

  static UniPoly from_ints(BaseField base, const std::vector<long>& coefficients);
  static UniPoly constant(BaseField base, const Scalar& c);
  /// The monomial c * t^k.
  static UniPoly monomial(BaseField base, const Scalar& c, std::size_t k);

  const BaseField& base() const { return base_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^k, zero beyond the degree.
  Scalar coefficient(std::size_t k) const;
  /// Throws Error(usage) on the zero polynomial.
  const Scalar& leading() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Scalar& c) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.base_ == b.base_ && a.coeffs_ == b.coeffs_;
  }

  /// Human form in `symbol`, ascending powers, e.g. "-2 + t^2".
  std::string to_string(const std::string& symbol = "t") const;

 private:
  void check_base(const UniPoly& rhs) const;
  void normalize();

  BaseField base_;
  std::vector<Scalar> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// a = b * quotient + remainder with deg(remainder) < deg(b).
DivMod poly_divmod(const UniPoly& a, const UniPoly& b);

struct XGcd {
  UniPoly gcd;  // monic
  UniPoly u;
  UniPoly v;    // u * a + v * b = gcd
};

XGcd poly_xgcd(const UniPoly& a, const UniPoly& b);

/// Horner evaluation.
Scalar poly_eval(const UniPoly& a, const Scalar& point);

/// base^exponent mod modulus, square-and-multiply.
UniPoly poly_powmod(const UniPoly& base, const mpz_class& exponent, const UniPoly& modulus);

}  // namespace noname::exact
