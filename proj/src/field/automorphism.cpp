#include "noname/field/automorphism.hpp"

#include "noname/error.hpp"

namespace noname::field {

Automorphism::Automorphism(FieldElement image_of_generator) : image_(std::move(image_of_generator)) {
  const Field& k = image_.field();
  const auto& m = k->modulus().coefficients();
  FieldElement value = FieldElement::zero(k);
  for (std::size_t j = m.size(); j-- > 0;) value = value * image_ + FieldElement::from_scalar(k, m[j]);
  if (!value.is_zero()) {
    throw Error(ErrorKind::precondition, "generator image " + image_.to_string() + " is not a root of the modulus");
  }
  FieldElement power = FieldElement::one(k);
  power_images_.reserve(k->degree());
  for (std::size_t j = 0; j < k->degree(); ++j) {
    power_images_.push_back(power.coords());
    power *= image_;
  }
}

Automorphism Automorphism::identity(const Field& field) { return Automorphism(FieldElement::generator(field)); }

bool Automorphism::is_identity() const { return image_ == FieldElement::generator(image_.field()); }

FieldElement Automorphism::operator()(const FieldElement& a) const {
  if (!same_field(a.field(), image_.field())) throw Error(ErrorKind::usage, "automorphism applied across fields");
  const auto& c = a.coords();
  const BaseField& base = a.field()->base();
  std::vector<Scalar> out(c.size(), Scalar::zero(base));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    const auto& col = power_images_[j];
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!col[k].is_zero()) out[k] += c[j] * col[k];
    }
  }
  return FieldElement(a.field(), std::move(out));
}

FieldElement apply_automorphism(const Automorphism& sigma, const FieldElement& a) { return sigma(a); }

Automorphism compose(const Automorphism& sigma, const Automorphism& tau) {
  if (!same_field(sigma.field(), tau.field())) throw Error(ErrorKind::usage, "composing automorphisms of different fields");
  return Automorphism(sigma(tau.image()));
}

Automorphism frobenius(const Field& field, std::uint64_t e) {
  if (!field->base().is_prime_field()) throw Error(ErrorKind::usage, "Frobenius needs a prime base field");
  mpz_class q = 1;
  const mpz_class p(static_cast<unsigned long>(field->base().characteristic()));
  for (std::uint64_t k = 0; k < e; ++k) q *= p;
  return Automorphism(FieldElement::generator(field).pow(q));
}

}  // namespace noname::field
