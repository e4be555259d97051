#include "noname/group/iso.hpp"

#include "noname/error.hpp"

namespace noname::group {

GroupFieldIso bind_iso(MatrixGroup group, field::GaloisPresentation presentation,
                       const std::vector<field::Automorphism>& generator_images) {
  if (generator_images.size() != group.generators().size()) {
    throw Error(ErrorKind::iso, "need one automorphism image per group generator");
  }
  const std::size_t order = group.order();
  if (order != presentation.order()) {
    throw Error(ErrorKind::iso, "group order " + std::to_string(order) + " differs from Galois group order " +
                                    std::to_string(presentation.order()));
  }
  const auto& autos = presentation.automorphisms;
  std::vector<std::size_t> image_index;
  for (std::size_t s = 0; s < generator_images.size(); ++s) {
    const auto idx = presentation.index_of(generator_images[s]);
    if (!idx) throw Error(ErrorKind::iso, "image of generator " + std::to_string(s + 1) + " is not in the presentation");
    image_index.push_back(*idx);
  }
  const auto id = presentation.identity_index();
  if (!id) throw Error(ErrorKind::iso, "presentation lacks the identity");

  // Composition table of the presentation.
  std::vector<std::size_t> compose_table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const auto c = presentation.index_of(field::compose(autos[a], autos[b]));
      if (!c) throw Error(ErrorKind::iso, "presentation is not closed under composition");
      compose_table[a * order + b] = *c;
    }
  }

  std::vector<std::size_t> assignment(order);
  assignment[0] = *id;
  const auto& derivations = group.derivations();
  for (std::size_t k = 1; k < order; ++k) {
    const auto [parent, gen] = derivations[k];
    assignment[k] = compose_table[image_index[gen] * order + assignment[parent]];
  }
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t s = 0; s < group.generators().size(); ++s) {
      const std::size_t target = *group.index_of(group.generators()[s] * group.element(k));
      if (assignment[target] != compose_table[image_index[s] * order + assignment[k]]) {
        throw Error(ErrorKind::iso, "generator images do not extend to a homomorphism (element " +
                                        std::to_string(target) + " reached by inconsistent words)");
      }
    }
  }
  std::vector<bool> hit(order, false);
  for (auto a : assignment) {
    if (hit[a]) throw Error(ErrorKind::iso, "assignment is not injective");
    hit[a] = true;
  }
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (assignment[group.mul(a, b)] != compose_table[assignment[a] * order + assignment[b]]) {
        throw Error(ErrorKind::iso, "homomorphism law fails on elements " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
  GroupFieldIso iso(std::move(group), std::move(presentation));
  iso.assignment_ = std::move(assignment);
  return iso;
}

}  // namespace noname::group
