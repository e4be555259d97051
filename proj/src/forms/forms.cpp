#include "noname/forms/forms.hpp"

#include "noname/error.hpp"

namespace noname::forms {

LinearForm LinearForm::zero(const Field& field, std::size_t n) {
  return {std::vector<FieldElement>(n, FieldElement::zero(field))};
}

LinearForm LinearForm::unit(const Field& field, std::size_t n, std::size_t j) {
  LinearForm f = zero(field, n);
  f.coefficients[j] = FieldElement::one(field);
  return f;
}

bool LinearForm::is_zero() const {
  for (const auto& c : coefficients) {
    if (!c.is_zero()) return false;
  }
  return true;
}

AffineForm AffineForm::zero(const Field& field, std::size_t n) {
  return {FieldElement::zero(field), std::vector<FieldElement>(n, FieldElement::zero(field))};
}

AffineForm AffineForm::unit(const Field& field, std::size_t n, std::size_t j) {
  AffineForm f = zero(field, n);
  f.coefficients[j] = FieldElement::one(field);
  return f;
}

bool AffineForm::is_zero() const {
  if (!constant.is_zero()) return false;
  for (const auto& c : coefficients) {
    if (!c.is_zero()) return false;
  }
  return true;
}

LinearForm act_linear(const group::GroupFieldIso& iso, std::size_t g, const LinearForm& f) {
  const auto& elem = iso.group().element(g);
  if (!elem.is_unsigned()) throw Error(ErrorKind::usage, "act_linear on a signed element; use act_affine");
  if (f.size() != elem.dimension()) throw Error(ErrorKind::usage, "form length differs from group dimension");
  const auto& sigma = iso.sigma(g);
  LinearForm out = f;
  for (std::size_t j = 0; j < f.size(); ++j) out.coefficients[elem.image(j)] = sigma(f.coefficients[j]);
  return out;
}

AffineForm act_affine(const group::GroupFieldIso& iso, std::size_t g, const AffineForm& f) {
  const auto& elem = iso.group().element(g);
  if (f.size() != elem.dimension()) throw Error(ErrorKind::usage, "form length differs from group dimension");
  const auto& sigma = iso.sigma(g);
  AffineForm out = AffineForm::zero(f.field(), f.size());
  out.constant = sigma(f.constant);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f.coefficients[j].is_zero()) continue;
    const FieldElement c = sigma(f.coefficients[j]);
    if (elem.sign(j) > 0) {
      out.coefficients[elem.image(j)] += c;
    } else {
      out.constant += c;
      out.coefficients[elem.image(j)] -= c;
    }
  }
  return out;
}

LinearForm substitute(const LinearForm& f, const std::vector<LinearForm>& images) {
  if (images.size() != f.size() || images.empty()) throw Error(ErrorKind::usage, "substitution arity mismatch");
  LinearForm out = LinearForm::zero(f.field(), images.front().size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f.coefficients[j].is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out.coefficients[k] += f.coefficients[j] * images[j].coefficients[k];
  }
  return out;
}

AffineForm substitute(const AffineForm& f, const std::vector<AffineForm>& images) {
  if (images.size() != f.size() || images.empty()) throw Error(ErrorKind::usage, "substitution arity mismatch");
  AffineForm out = AffineForm::zero(f.field(), images.front().size());
  out.constant = f.constant;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f.coefficients[j].is_zero()) continue;
    out.constant += f.coefficients[j] * images[j].constant;
    for (std::size_t k = 0; k < out.size(); ++k) out.coefficients[k] += f.coefficients[j] * images[j].coefficients[k];
  }
  return out;
}

}  // namespace noname::forms
