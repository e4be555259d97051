#pragma once

#include <memory>
#include <string>
#include <vector>

#include "noname/exact/unipoly.hpp"

namespace noname::field {

using exact::BaseField;
using exact::Scalar;
using exact::UniPoly;

enum class Irreducibility { verified, asserted };

struct FieldOptions {
  /// Accept a rational-base modulus whose bounded irreducibility search is
  /// inconclusive; recorded as Irreducibility::asserted.
  bool trust_irreducible = false;
};

/// K = base[t]/(m(t)) with m monic and irreducible, presented by the power
/// basis 1, t, ..., t^(d-1).
class FieldDescriptor {
 public:
  /// Normalizes m to monic. Throws Error(precondition) for a reducible or
  /// unverifiable modulus, Error(usage) for a constant one.
  static std::shared_ptr<const FieldDescriptor> create(const UniPoly& modulus, FieldOptions options = {});

  const BaseField& base() const { return modulus_.base(); }
  const UniPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  Irreducibility irreducibility() const { return irreducibility_; }
  const std::string& irreducibility_reason() const { return reason_; }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) { return a.modulus_ == b.modulus_; }

 private:
  FieldDescriptor(UniPoly modulus, Irreducibility irr, std::string reason)
      : modulus_(std::move(modulus)), irreducibility_(irr), reason_(std::move(reason)) {}

  UniPoly modulus_;
  Irreducibility irreducibility_;
  std::string reason_;
};

using Field = std::shared_ptr<const FieldDescriptor>;

bool same_field(const Field& a, const Field& b);

/// Element of K as d coordinates over the power basis.
class FieldElement {
 public:
  /// Coordinates beyond degree d-1 are reduced mod m; shorter vectors are padded.
  FieldElement(Field field, std::vector<Scalar> coords);

  static FieldElement zero(const Field& field);
  static FieldElement one(const Field& field);
  static FieldElement from_scalar(const Field& field, const Scalar& c);
  static FieldElement from_int(const Field& field, long c);
  static FieldElement generator(const Field& field);
  static FieldElement from_poly(const Field& field, const UniPoly& p);

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  UniPoly to_poly() const;

  bool is_zero() const;
  bool is_one() const;
  /// True when all coordinates beyond the constant slot vanish.
  bool in_base() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement scaled(const Scalar& c) const;

  /// Inverse via extended Euclid against m; Error(arithmetic) on zero.
  FieldElement inverse() const;
  FieldElement pow(const mpz_class& exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Ascending powers of `symbol`, e.g. "r5^3 + r5^4".
  std::string to_string(const std::string& symbol = "t") const;

 private:
  void check_field(const FieldElement& rhs) const;

  Field field_;
  std::vector<Scalar> coords_;
};

/// The d power-basis coordinates of a.
std::vector<Scalar> coords_over_base(const FieldElement& a);

}  // namespace noname::field
