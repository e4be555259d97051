#include "noname/exact/scalar.hpp"

#include "noname/error.hpp"

namespace noname::exact {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t k = 3; k <= p / k; k += 2) {
    if (p % k == 0) return false;
  }
  return true;
}

BaseField BaseField::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::usage, std::to_string(p) + " is not prime");
  return BaseField(p);
}

std::string BaseField::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

PrimeFieldElement::PrimeFieldElement(std::uint64_t residue, std::uint64_t p) : residue_(residue % p), p_(p) {}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return {residue_ == 0 ? 0 : p_ - residue_, p_};
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& rhs) const {
  const unsigned __int128 s = static_cast<unsigned __int128>(residue_) + rhs.residue_;
  return {static_cast<std::uint64_t>(s % p_), p_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& rhs) const { return *this + (-rhs); }

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& rhs) const {
  const unsigned __int128 m = static_cast<unsigned __int128>(residue_) * rhs.residue_;
  return {static_cast<std::uint64_t>(m % p_), p_};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (residue_ == 0) throw Error(ErrorKind::arithmetic, "division by zero in F_" + std::to_string(p_));
  // Extended Euclid on signed 128-bit to avoid overflow.
  __int128 a = residue_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const __int128 q = a / b;
    __int128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  __int128 r = x0 % static_cast<__int128>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint64_t>(r), p_};
}

PrimeFieldElement PrimeFieldElement::operator/(const PrimeFieldElement& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::from_int(const BaseField& base, long value) {
  if (base.is_rational()) return Scalar(Rational(value));
  const auto p = static_cast<long long>(base.characteristic());
  long long r = static_cast<long long>(value) % p;
  if (r < 0) r += p;
  return Scalar(PrimeFieldElement(static_cast<std::uint64_t>(r), base.characteristic()));
}

Scalar Scalar::from_rational(const BaseField& base, const Rational& value) {
  if (base.is_rational()) return Scalar(value);
  const mpz_class p(std::to_string(base.characteristic()));
  auto reduce = [&](mpz_class v) {
    v %= p;
    if (v < 0) v += p;
    return PrimeFieldElement(std::stoull(v.get_str()), base.characteristic());
  };
  const auto den = reduce(value.denominator());
  if (den.residue() == 0) {
    throw Error(ErrorKind::arithmetic, "denominator of " + value.to_string() + " vanishes in " + base.to_string());
  }
  return Scalar(reduce(value.numerator()) / den);
}

BaseField Scalar::base() const {
  if (std::holds_alternative<Rational>(value_)) return BaseField::rationals();
  return BaseField(std::get<PrimeFieldElement>(value_).modulus());
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->is_zero();
  return std::get<PrimeFieldElement>(value_).residue() == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q == Rational(1);
  return std::get<PrimeFieldElement>(value_).residue() == 1;
}

void Scalar::check_same_base(const Scalar& rhs) const {
  if (value_.index() != rhs.value_.index() ||
      (value_.index() == 1 && as_residue().modulus() != rhs.as_residue().modulus())) {
    throw Error(ErrorKind::usage, "scalar base mismatch");
  }
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(-*q);
  return Scalar(-as_residue());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_base(rhs);
  if (auto* q = std::get_if<Rational>(&value_)) {
    *q += rhs.as_rational();
  } else {
    value_ = as_residue() + rhs.as_residue();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_base(rhs);
  if (auto* q = std::get_if<Rational>(&value_)) {
    *q -= rhs.as_rational();
  } else {
    value_ = as_residue() - rhs.as_residue();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_base(rhs);
  if (auto* q = std::get_if<Rational>(&value_)) {
    *q *= rhs.as_rational();
  } else {
    value_ = as_residue() * rhs.as_residue();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_base(rhs);
  if (auto* q = std::get_if<Rational>(&value_)) {
    *q /= rhs.as_rational();
  } else {
    value_ = as_residue() / rhs.as_residue();
  }
  return *this;
}

Scalar Scalar::inverse() const { return one(base()) / *this; }

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->to_string();
  return std::to_string(as_residue().residue());
}

std::string Scalar::to_signed_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->to_string();
  const auto& r = as_residue();
  if (r.residue() > r.modulus() / 2) return "-" + std::to_string(r.modulus() - r.residue());
  return std::to_string(r.residue());
}

}  // namespace noname::exact
