#pragma once

#include <map>
#include <vector>

#include "noname/forms/forms.hpp"

namespace noname::forms {

/// Sparse multivariate polynomial over K; zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly(Field field, std::size_t variables) : field_(std::move(field)), variables_(variables) {}

  static MultiPoly constant(const Field& field, std::size_t variables, const FieldElement& c);

  const Field& field() const { return field_; }
  std::size_t variables() const { return variables_; }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const FieldElement& c);
  MultiPoly times(const LinearForm& f) const;

  /// True when every stored exponent vector sums to `degree`.
  bool is_homogeneous(unsigned degree) const;

 private:
  Field field_;
  std::size_t variables_;
  std::map<Exponents, FieldElement> terms_;
};

/// Product of linear forms in y_1..y_n, fully distributed.
MultiPoly expand_product(const std::vector<LinearForm>& forms);

/// True iff every coefficient lies in the base field.
bool coefficients_in_base(const MultiPoly& p);

}  // namespace noname::forms
