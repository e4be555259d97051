#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noname/exact/linalg.hpp"
#include "noname/field/automorphism.hpp"

namespace noname::field {

/// Explicit list of automorphisms claimed to be Gal(K/base).
struct GaloisPresentation {
  Field field;
  std::vector<Automorphism> automorphisms;

  std::size_t order() const { return automorphisms.size(); }
  std::optional<std::size_t> index_of(const Automorphism& sigma) const;
  std::optional<std::size_t> identity_index() const;
};

/// Closes `generators` under composition. The identity comes first, then
/// elements in discovery order. Error(finiteness_cap) past `cap` elements.
GaloisPresentation close_automorphisms(const Field& field, const std::vector<Automorphism>& generators,
                                       std::size_t cap = 4096);

struct PresentationReport {
  bool ok = false;
  std::string failure;  // first violated condition, empty on success
};

/// Distinctness, identity, closure, inverses, |set| = deg m, and that the
/// common fixed subspace is exactly the base field.
PresentationReport verify_presentation(const GaloisPresentation& p);

/// Rows: base coordinates of sigma(alpha) for each sigma in p.
exact::ScalarMatrix conjugate_matrix(const FieldElement& alpha, const GaloisPresentation& p);

/// True iff the conjugates of alpha form a base-field basis of K.
bool is_normal(const FieldElement& alpha, const GaloisPresentation& p);

/// Randomized search: coefficients drawn from {-h..h}, h = 1 doubling after
/// every d^2 failures. Deterministic in `seed`. Throws SearchFailure.
FieldElement find_normal(const GaloisPresentation& p, std::uint64_t seed, std::size_t max_tries = 100000);

}  // namespace noname::field

namespace noname::field {

/// Dimension of the base-field span of `elements`.
std::size_t base_rank(const std::vector<FieldElement>& elements);

inline bool independent_over_base(const std::vector<FieldElement>& elements) {
  return base_rank(elements) == elements.size();
}

}  // namespace noname::field
