#include "noname/field/galois.hpp"

#include <deque>
#include <random>

#include "noname/error.hpp"

namespace noname::field {

std::optional<std::size_t> GaloisPresentation::index_of(const Automorphism& sigma) const {
  for (std::size_t k = 0; k < automorphisms.size(); ++k) {
    if (automorphisms[k] == sigma) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> GaloisPresentation::identity_index() const {
  for (std::size_t k = 0; k < automorphisms.size(); ++k) {
    if (automorphisms[k].is_identity()) return k;
  }
  return std::nullopt;
}

GaloisPresentation close_automorphisms(const Field& field, const std::vector<Automorphism>& generators,
                                       std::size_t cap) {
  GaloisPresentation p{field, {Automorphism::identity(field)}};
  for (std::size_t k = 0; k < p.automorphisms.size(); ++k) {
    for (const auto& g : generators) {
      Automorphism next = compose(g, p.automorphisms[k]);
      if (p.index_of(next)) continue;
      if (p.automorphisms.size() >= cap) {
        throw Error(ErrorKind::finiteness_cap, "automorphism closure exceeds " + std::to_string(cap) + " elements");
      }
      p.automorphisms.push_back(std::move(next));
    }
  }
  return p;
}

PresentationReport verify_presentation(const GaloisPresentation& p) {
  const auto& autos = p.automorphisms;
  for (const auto& a : autos) {
    if (!same_field(a.field(), p.field)) return {false, "automorphism defined on a different field"};
  }
  for (std::size_t i = 0; i < autos.size(); ++i) {
    for (std::size_t j = i + 1; j < autos.size(); ++j) {
      if (autos[i] == autos[j]) {
        return {false, "automorphisms " + std::to_string(i) + " and " + std::to_string(j) + " coincide"};
      }
    }
  }
  const auto id = p.identity_index();
  if (!id) return {false, "identity automorphism missing"};
  for (std::size_t i = 0; i < autos.size(); ++i) {
    for (std::size_t j = 0; j < autos.size(); ++j) {
      if (!p.index_of(compose(autos[i], autos[j]))) {
        return {false, "not closed: composite of " + std::to_string(i) + " and " + std::to_string(j) + " missing"};
      }
    }
  }
  for (std::size_t i = 0; i < autos.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < autos.size() && !found; ++j) found = compose(autos[i], autos[j]).is_identity();
    if (!found) return {false, "automorphism " + std::to_string(i) + " has no inverse in the set"};
  }
  const std::size_t d = p.field->degree();
  if (autos.size() != d) {
    return {false, "group order " + std::to_string(autos.size()) + " differs from degree " + std::to_string(d)};
  }
  // Fixed subspace: kernel of the stacked maps (sigma - id).
  const BaseField& base = p.field->base();
  exact::ScalarMatrix stacked(base, d * autos.size(), d);
  for (std::size_t s = 0; s < autos.size(); ++s) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Scalar> unit(d, Scalar::zero(base));
      unit[j] = Scalar::one(base);
      const auto image = autos[s](FieldElement(p.field, unit)).coords();
      for (std::size_t r = 0; r < d; ++r) stacked(s * d + r, j) = image[r] - unit[r];
    }
  }
  const std::size_t fixed_dim = d - exact::rank(stacked);
  if (fixed_dim != 1) {
    return {false, "fixed subspace has dimension " + std::to_string(fixed_dim) + ", expected 1"};
  }
  return {true, {}};
}

exact::ScalarMatrix conjugate_matrix(const FieldElement& alpha, const GaloisPresentation& p) {
  const std::size_t d = p.field->degree();
  exact::ScalarMatrix m(p.field->base(), p.order(), d);
  for (std::size_t s = 0; s < p.order(); ++s) {
    const auto row = p.automorphisms[s](alpha).coords();
    for (std::size_t j = 0; j < d; ++j) m(s, j) = row[j];
  }
  return m;
}

bool is_normal(const FieldElement& alpha, const GaloisPresentation& p) {
  if (p.order() != p.field->degree()) return false;
  return !exact::determinant(conjugate_matrix(alpha, p)).is_zero();
}

FieldElement find_normal(const GaloisPresentation& p, std::uint64_t seed, std::size_t max_tries) {
  const std::size_t d = p.field->degree();
  const BaseField& base = p.field->base();
  std::mt19937_64 rng(seed);
  long height = 1;
  std::size_t failures_at_height = 0;
  for (std::size_t tries = 1; tries <= max_tries; ++tries) {
    std::uniform_int_distribution<long> draw(-height, height);
    std::vector<Scalar> coords;
    coords.reserve(d);
    for (std::size_t k = 0; k < d; ++k) coords.push_back(Scalar::from_int(base, draw(rng)));
    FieldElement candidate(p.field, std::move(coords));
    if (!candidate.is_zero() && is_normal(candidate, p)) return candidate;
    if (++failures_at_height == d * d) {
      failures_at_height = 0;
      height *= 2;
    }
  }
  throw SearchFailure("no normal element found in " + std::to_string(max_tries) + " tries", max_tries);
}

}  // namespace noname::field

namespace noname::field {

std::size_t base_rank(const std::vector<FieldElement>& elements) {
  if (elements.empty()) return 0;
  const Field& k = elements.front().field();
  exact::ScalarMatrix m(k->base(), elements.size(), k->degree());
  for (std::size_t r = 0; r < elements.size(); ++r) {
    for (std::size_t c = 0; c < k->degree(); ++c) m(r, c) = elements[r].coords()[c];
  }
  return exact::rank(std::move(m));
}

}  // namespace noname::field
