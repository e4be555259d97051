#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noname/forms/kmatrix.hpp"
#include "noname/group/iso.hpp"

namespace noname::core {

using forms::FieldElement;
using forms::KMatrix;

/// Outcome of checking the two hypotheses of the column-permutation
/// invertibility lemma on a square matrix (or a principal block of it).
struct SigndetReport {
  std::vector<std::size_t> indices;  // rows/columns of the block, 0-based
  bool columns_permuted = false;     // iota(g)(M_j) = +-M_{rho_g(j)} for all g, j
  bool first_column_independent = false;
  bool lemma_applies = false;        // both hypotheses hold
  std::optional<FieldElement> determinant;  // of the block
  bool det_nonzero = false;
  /// Set when the hypotheses hold but the determinant vanishes.
  bool lemma_violated = false;
  std::string failure;               // first failed hypothesis, empty if none
};

SigndetReport check_signdet_hypotheses(const KMatrix& m, const group::GroupFieldIso& iso);

/// Same checks on the principal block picked out by `indices`, which must be
/// a union of orbits for the group action.
SigndetReport check_signdet_block(const KMatrix& m, const group::GroupFieldIso& iso,
                                  const std::vector<std::size_t>& indices);

}  // namespace noname::core
