#include "noname/field/field.hpp"

#include "noname/error.hpp"
#include "noname/field/irreducible.hpp"

namespace noname::field {

std::shared_ptr<const FieldDescriptor> FieldDescriptor::create(const UniPoly& modulus, FieldOptions options) {
  if (modulus.degree() < 1) throw Error(ErrorKind::usage, "field modulus must have degree >= 1");
  UniPoly m = modulus.monic();
  const auto result = check_irreducible(m);
  switch (result.verdict) {
    case IrreducibleVerdict::irreducible:
      return std::shared_ptr<const FieldDescriptor>(new FieldDescriptor(std::move(m), Irreducibility::verified, result.reason));
    case IrreducibleVerdict::reducible:
      throw Error(ErrorKind::precondition, "modulus " + m.to_string() + " is reducible: " + result.reason);
    case IrreducibleVerdict::inconclusive:
      if (options.trust_irreducible && m.base().is_rational()) {
        return std::shared_ptr<const FieldDescriptor>(new FieldDescriptor(std::move(m), Irreducibility::asserted, result.reason));
      }
      throw Error(ErrorKind::precondition,
                  "irreducibility of " + m.to_string() + " could not be verified (" + result.reason +
                      "); set trust_irreducible to accept it");
  }
  throw Error(ErrorKind::internal_inconsistency, "unreachable irreducibility verdict");
}

bool same_field(const Field& a, const Field& b) { return a == b || (a && b && *a == *b); }

FieldElement::FieldElement(Field field, std::vector<Scalar> coords) : field_(std::move(field)) {
  if (!field_) throw Error(ErrorKind::usage, "field element without a field");
  const std::size_t d = field_->degree();
  const BaseField& base = field_->base();
  for (const auto& c : coords) {
    if (!(c.base() == base)) throw Error(ErrorKind::usage, "coordinate base differs from field base");
  }
  if (coords.size() > d) {
    const auto& m = field_->modulus().coefficients();
    for (std::size_t k = coords.size(); k-- > d;) {
      if (coords[k].is_zero()) continue;
      const Scalar c = coords[k];
      for (std::size_t j = 0; j < d; ++j) coords[k - d + j] -= c * m[j];
      coords[k] = Scalar::zero(base);
    }
  }
  coords.resize(d, Scalar::zero(base));
  coords_ = std::move(coords);
}

FieldElement FieldElement::zero(const Field& field) { return FieldElement(field, {}); }
FieldElement FieldElement::one(const Field& field) { return from_int(field, 1); }
FieldElement FieldElement::from_scalar(const Field& field, const Scalar& c) { return FieldElement(field, {c}); }
FieldElement FieldElement::from_int(const Field& field, long c) {
  return FieldElement(field, {Scalar::from_int(field->base(), c)});
}

FieldElement FieldElement::generator(const Field& field) {
  const BaseField& b = field->base();
  return FieldElement(field, {Scalar::zero(b), Scalar::one(b)});
}

FieldElement FieldElement::from_poly(const Field& field, const UniPoly& p) {
  if (!(p.base() == field->base())) throw Error(ErrorKind::usage, "polynomial base differs from field base");
  return FieldElement(field, p.coefficients());
}

UniPoly FieldElement::to_poly() const { return UniPoly(field_->base(), coords_); }

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool FieldElement::is_one() const { return in_base() && coords_[0].is_one(); }

bool FieldElement::in_base() const {
  for (std::size_t k = 1; k < coords_.size(); ++k) {
    if (!coords_[k].is_zero()) return false;
  }
  return true;
}

void FieldElement::check_field(const FieldElement& rhs) const {
  if (!same_field(field_, rhs.field_)) throw Error(ErrorKind::usage, "field descriptor mismatch");
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_field(rhs);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_field(rhs);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_field(rhs);
  const std::size_t d = coords_.size();
  const BaseField& base = field_->base();
  std::vector<Scalar> prod(2 * d - 1, Scalar::zero(base));
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coords_[j].is_zero()) continue;
      prod[i + j] += coords_[i] * rhs.coords_[j];
    }
  }
  *this = FieldElement(field_, std::move(prod));
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_field(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::scaled(const Scalar& c) const {
  FieldElement r = *this;
  for (auto& x : r.coords_) x *= c;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::arithmetic, "division by zero in K");
  const auto g = exact::poly_xgcd(to_poly(), field_->modulus());
  if (g.gcd.degree() != 0) {
    throw Error(ErrorKind::internal_inconsistency, "nonzero element shares a factor with the modulus");
  }
  return from_poly(field_, g.u);
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result = one(field_);
  FieldElement acc = *this;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t k = 0; k < bits; ++k) {
    if (mpz_tstbit(exponent.get_mpz_t(), k)) result *= acc;
    if (k + 1 < bits) acc *= acc;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.coords_ == b.coords_;
}

std::string FieldElement::to_string(const std::string& symbol) const { return to_poly().to_string(symbol); }

std::vector<Scalar> coords_over_base(const FieldElement& a) { return a.coords(); }

}  // namespace noname::field
