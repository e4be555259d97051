#pragma once

#include "noname/field/field.hpp"

namespace noname::field {

/// Field automorphism of K fixing the base, determined by the image of t.
/// Application is a base-linear map; the images of 1, t, ..., t^(d-1) are
/// cached as columns.
class Automorphism {
 public:
  /// Throws Error(precondition) unless m(image) = 0.
  explicit Automorphism(FieldElement image_of_generator);

  static Automorphism identity(const Field& field);

  const Field& field() const { return image_.field(); }
  const FieldElement& image() const { return image_; }
  bool is_identity() const;

  FieldElement operator()(const FieldElement& a) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.image_ == b.image_; }

 private:
  FieldElement image_;
  std::vector<std::vector<Scalar>> power_images_;
};

FieldElement apply_automorphism(const Automorphism& sigma, const FieldElement& a);

/// sigma after tau: t -> sigma(tau(t)).
Automorphism compose(const Automorphism& sigma, const Automorphism& tau);

/// a -> a^(p^e) on a prime-base field. Throws Error(usage) over Q.
Automorphism frobenius(const Field& field, std::uint64_t e);

}  // namespace noname::field
