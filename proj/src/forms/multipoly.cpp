#include "noname/forms/multipoly.hpp"

#include <numeric>

#include "noname/error.hpp"

namespace noname::forms {

MultiPoly MultiPoly::constant(const Field& field, std::size_t variables, const FieldElement& c) {
  MultiPoly p(field, variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
  if (e.size() != variables_) throw Error(ErrorKind::usage, "exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::times(const LinearForm& f) const {
  if (f.size() != variables_) throw Error(ErrorKind::usage, "linear form arity mismatch");
  MultiPoly out(field_, variables_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < variables_; ++j) {
      if (f.coefficients[j].is_zero()) continue;
      Exponents next = e;
      ++next[j];
      out.add_term(next, c * f.coefficients[j]);
    }
  }
  return out;
}

bool MultiPoly::is_homogeneous(unsigned degree) const {
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0U) != degree) return false;
  }
  return true;
}

MultiPoly expand_product(const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw Error(ErrorKind::usage, "product of zero forms has no field");
  const auto& field = forms.front().field();
  MultiPoly p = MultiPoly::constant(field, forms.front().size(), FieldElement::one(field));
  for (const auto& f : forms) p = p.times(f);
  return p;
}

bool coefficients_in_base(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (!c.in_base()) return false;
  }
  return true;
}

}  // namespace noname::forms
