#pragma once

#include "noname/field/galois.hpp"
#include "noname/group/matrix_group.hpp"

namespace noname::group {

/// A verified isomorphism iota: G -> Gal(K/F), stored as element index ->
/// automorphism index.
class GroupFieldIso {
 public:
  const MatrixGroup& group() const { return group_; }
  const field::GaloisPresentation& presentation() const { return presentation_; }
  const field::Field& field() const { return presentation_.field; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  /// iota(g) for roster index g.
  const field::Automorphism& sigma(std::size_t g) const { return presentation_.automorphisms[assignment_[g]]; }

  friend GroupFieldIso bind_iso(MatrixGroup group, field::GaloisPresentation presentation,
                                const std::vector<field::Automorphism>& generator_images);

 private:
  GroupFieldIso(MatrixGroup g, field::GaloisPresentation p) : group_(std::move(g)), presentation_(std::move(p)) {}

  MatrixGroup group_;
  field::GaloisPresentation presentation_;
  std::vector<std::size_t> assignment_;
};

/// Extends generator -> automorphism along the closure words, then checks
/// bijectivity and iota(gh) = iota(g) o iota(h) on the whole table.
/// Throws Error(iso) on any inconsistency.
GroupFieldIso bind_iso(MatrixGroup group, field::GaloisPresentation presentation,
                       const std::vector<field::Automorphism>& generator_images);

}  // namespace noname::group
