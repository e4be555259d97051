#pragma once

#include <vector>

#include "noname/field/field.hpp"
#include "noname/group/iso.hpp"

namespace noname::forms {

using field::Field;
using field::FieldElement;

/// sum_j coefficients[j] * v_j over a declared variable basis.
struct LinearForm {
  std::vector<FieldElement> coefficients;

  static LinearForm zero(const Field& field, std::size_t n);
  /// The form v_j.
  static LinearForm unit(const Field& field, std::size_t n, std::size_t j);

  std::size_t size() const { return coefficients.size(); }
  const Field& field() const { return coefficients.front().field(); }
  bool is_zero() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// constant + sum_j coefficients[j] * v_j.
struct AffineForm {
  FieldElement constant;
  std::vector<FieldElement> coefficients;

  static AffineForm zero(const Field& field, std::size_t n);
  static AffineForm unit(const Field& field, std::size_t n, std::size_t j);

  std::size_t size() const { return coefficients.size(); }
  const Field& field() const { return constant.field(); }
  bool is_zero() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// g acting on a form in x_1..x_n: x_j -> x_{rho_g(j)}, coefficients through
/// iota(g). Throws Error(usage) if g carries a sign.
LinearForm act_linear(const group::GroupFieldIso& iso, std::size_t g, const LinearForm& f);

/// g acting on a form in z_j = 1/(1 + x_j): z_j -> z_{rho_g(j)} for sign +,
/// z_j -> 1 - z_{rho_g(j)} for sign -, coefficients through iota(g).
AffineForm act_affine(const group::GroupFieldIso& iso, std::size_t g, const AffineForm& f);

/// f(v) with v_j replaced by images[j] (forms over a second basis).
LinearForm substitute(const LinearForm& f, const std::vector<LinearForm>& images);
AffineForm substitute(const AffineForm& f, const std::vector<AffineForm>& images);

}  // namespace noname::forms
