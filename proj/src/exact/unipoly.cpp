#include "noname/exact/unipoly.hpp"

#include "noname/error.hpp"

namespace noname::exact {

UniPoly::UniPoly(BaseField base, std::vector<Scalar> coefficients) : base_(base), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (!(c.base() == base_)) throw Error(ErrorKind::usage, "coefficient base differs from polynomial base");
  }
  normalize();
}

UniPoly UniPoly::from_ints(BaseField base, const std::vector<long>& coefficients) {
  std::vector<Scalar> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.push_back(Scalar::from_int(base, v));
  return UniPoly(base, std::move(c));
}

UniPoly UniPoly::constant(BaseField base, const Scalar& c) { return UniPoly(base, {c}); }

UniPoly UniPoly::monomial(BaseField base, const Scalar& c, std::size_t k) {
  std::vector<Scalar> coeffs(k + 1, Scalar::zero(base));
  coeffs[k] = c;
  return UniPoly(base, std::move(coeffs));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::check_base(const UniPoly& rhs) const {
  if (!(base_ == rhs.base_)) throw Error(ErrorKind::usage, "polynomial base mismatch");
}

Scalar UniPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(base_);
}

const Scalar& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::usage, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  check_base(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(base_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  check_base(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(base_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_base(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.base_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.base_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.base_, std::move(out));
}

UniPoly UniPoly::scaled(const Scalar& c) const {
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

std::string UniPoly::to_string(const std::string& symbol) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mag = c.to_signed_string();
    const bool negative = !mag.empty() && mag[0] == '-';
    if (negative) mag.erase(0, 1);
    std::string mono;
    if (k == 0) {
      mono = mag;
    } else {
      const std::string power = k == 1 ? symbol : symbol + "^" + std::to_string(k);
      mono = mag == "1" ? power : mag + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + mono : mono;
    } else {
      out += negative ? " - " : " + ";
      out += mono;
    }
  }
  return out;
}

DivMod poly_divmod(const UniPoly& a, const UniPoly& b) {
  if (!(a.base() == b.base())) throw Error(ErrorKind::usage, "polynomial base mismatch");
  if (b.is_zero()) throw Error(ErrorKind::arithmetic, "polynomial division by zero");
  const BaseField base = a.base();
  if (a.degree() < b.degree()) return {UniPoly(base), a};
  std::vector<Scalar> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Scalar> quot(rem.size() - db, Scalar::zero(base));
  const Scalar inv_lead = bc.back().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Scalar q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {UniPoly(base, std::move(quot)), UniPoly(base, std::move(rem))};
}

XGcd poly_xgcd(const UniPoly& a, const UniPoly& b) {
  if (!(a.base() == b.base())) throw Error(ErrorKind::usage, "polynomial base mismatch");
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::usage, "gcd of two zero polynomials");
  const BaseField base = a.base();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(base, Scalar::one(base)), s1(base);
  UniPoly t0(base), t1 = UniPoly::constant(base, Scalar::one(base));
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Scalar poly_eval(const UniPoly& a, const Scalar& point) {
  if (!(a.base() == point.base())) throw Error(ErrorKind::usage, "evaluation point base mismatch");
  Scalar acc = Scalar::zero(a.base());
  const auto& c = a.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * point + c[k];
  return acc;
}

UniPoly poly_powmod(const UniPoly& base, const mpz_class& exponent, const UniPoly& modulus) {
  if (exponent < 0) throw Error(ErrorKind::usage, "negative exponent");
  UniPoly result = poly_divmod(UniPoly::constant(base.base(), Scalar::one(base.base())), modulus).remainder;
  UniPoly acc = poly_divmod(base, modulus).remainder;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t k = 0; k < bits; ++k) {
    if (mpz_tstbit(exponent.get_mpz_t(), k)) result = poly_divmod(result * acc, modulus).remainder;
    if (k + 1 < bits) acc = poly_divmod(acc * acc, modulus).remainder;
  }
  return result;
}

}  // namespace noname::exact
