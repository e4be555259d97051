#pragma once

#include <string>

#include "noname/exact/unipoly.hpp"

namespace noname::field {

enum class IrreducibleVerdict { irreducible, reducible, inconclusive };

struct IrreducibleResult {
  IrreducibleVerdict verdict;
  std::string reason;
};

/// Irreducibility of a nonconstant polynomial without full factorization.
///
/// Over F_p: exhaustive trial division by all monic polynomials of degree at
/// most d/2 when that set is small, otherwise Rabin's test.
///
/// Over Q: rational-root search, an exhaustive search for integer quadratic
/// factors within the Mignotte bound, and a sufficient test (irreducible
/// modulo some small prime). Degree <= 3 without roots and degree <= 5
/// without linear or quadratic factors are decided; higher degrees may come
/// back inconclusive.
IrreducibleResult check_irreducible(const exact::UniPoly& m);

/// Rabin's irreducibility test for a polynomial over a prime field.
bool rabin_irreducible(const exact::UniPoly& f);

}  // namespace noname::field
