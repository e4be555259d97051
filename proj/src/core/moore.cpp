#include "noname/core/moore.hpp"

#include "noname/error.hpp"
#include "noname/field/automorphism.hpp"

namespace noname::core {

MooreInstance moore_matrix(const forms::Field& field, const std::vector<forms::FieldElement>& tuple) {
  if (!field->base().is_prime_field()) throw Error(ErrorKind::usage, "Moore matrices need a prime base field");
  const std::size_t n = tuple.size();
  if (n > field->degree()) {
    throw Error(ErrorKind::usage, "tuple of length " + std::to_string(n) + " exceeds extension degree " +
                                      std::to_string(field->degree()));
  }
  const auto frob = field::frobenius(field, 1);
  forms::KMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    forms::FieldElement entry = tuple[i];
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = entry;
      entry = frob(entry);
    }
  }
  return {field, field->base().characteristic(), tuple, std::move(m)};
}

}  // namespace noname::core
