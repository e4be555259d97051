#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noname/core/signdet.hpp"
#include "noname/forms/forms.hpp"
#include "noname/forms/multipoly.hpp"
#include "noname/group/iso.hpp"

namespace noname::core {

using forms::AffineForm;
using forms::LinearForm;

enum class Construction { permutation, signed_perm };
enum class ConstructionRequest { automatic, permutation, signed_perm };

std::string to_string(Construction c);
/// "auto" | "permutation" | "signed"; Error(parse) otherwise.
ConstructionRequest parse_construction(const std::string& text);

/// Invariant generators y_1..y_n together with the evidence that they
/// generate the invariant field.
///
/// Permutation construction: y_i = sum_j m_{i,j} x_j with
/// m_{i,j} = sum over G_{i,j} of g(alpha).
///
/// Signed construction: y_i = c_i + sum_j m_{i,j} z_j, z_j = 1/(1 + x_j), with
/// m_{i,j} = sum over G+_{i,j} of g(alpha) - sum over G-_{i,j} of g(alpha)
/// and c_i = sum over all G-_{i,j} of g(alpha). `augmented` is the
/// (n+1)x(n+1) matrix of (1, y_1..y_n) over (1, z_1..z_n).
struct RationalityCertificate {
  Construction construction;
  FieldElement alpha;
  std::vector<LinearForm> linear_forms;  // permutation construction
  std::vector<AffineForm> affine_forms;  // signed construction
  KMatrix matrix;                        // M
  std::optional<KMatrix> augmented;      // M*, signed only
  std::vector<FieldElement> constants;   // c_i, signed only
  FieldElement determinant;              // det M (= det M*)
  KMatrix inverse;                       // M^-1
  bool invariance_checked = false;
  bool roundtrip_checked = false;
  bool block_diagonal = false;           // M vanishes across orbits
  group::OrbitPartition orbit_blocks;
  std::vector<SigndetReport> block_reports;
};

/// Throws Error(classification) on a signed group, Error(normality) when
/// alpha is not normal, Error(internal_inconsistency) when a check that the
/// construction guarantees fails.
RationalityCertificate build_permutation(const group::GroupFieldIso& iso, const FieldElement& alpha);
RationalityCertificate build_signed(const group::GroupFieldIso& iso, const FieldElement& alpha);

/// Dispatches on classify() for ConstructionRequest::automatic. Errors carry
/// the stage that raised them.
RationalityCertificate certify(const group::GroupFieldIso& iso, const FieldElement& alpha,
                               ConstructionRequest construction = ConstructionRequest::automatic);

/// Every y_i fixed by every group element.
bool check_invariance(const group::GroupFieldIso& iso, const std::vector<LinearForm>& ys);
bool check_invariance(const group::GroupFieldIso& iso, const std::vector<AffineForm>& ys);

/// Substituting x = M^-1 y (resp. z = M^-1 (y - c)) into each y_i returns y_i.
bool check_roundtrip(const std::vector<LinearForm>& ys, const KMatrix& inverse);
bool check_roundtrip(const std::vector<AffineForm>& ys, const KMatrix& inverse);

struct ProductInY {
  forms::MultiPoly poly;  // x_1 ... x_n as a polynomial in y
  bool coefficients_in_base;
};

/// Permutation certificates only; Error(usage) otherwise.
ProductInY product_in_y(const RationalityCertificate& cert);

}  // namespace noname::core
