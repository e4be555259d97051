#include "noname/core/certificate.hpp"

#include "noname/error.hpp"
#include "noname/field/galois.hpp"

namespace noname::core {

namespace {

template <typename Fn>
auto staged(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}

void require_normal(const group::GroupFieldIso& iso, const FieldElement& alpha) {
  if (!field::same_field(alpha.field(), iso.field())) {
    throw Error(ErrorKind::usage, "alpha lives in a different field", "normality");
  }
  if (!field::is_normal(alpha, iso.presentation())) {
    throw Error(ErrorKind::normality, "alpha is not a normal element", "normality");
  }
}

/// sum over `members` of iota(g)(alpha), using cached conjugates.
FieldElement conjugate_sum(const std::vector<FieldElement>& conjugates, const std::vector<std::size_t>& members,
                           const forms::Field& k) {
  FieldElement s = FieldElement::zero(k);
  for (auto g : members) s += conjugates[g];
  return s;
}

std::vector<FieldElement> conjugates_of(const group::GroupFieldIso& iso, const FieldElement& alpha) {
  std::vector<FieldElement> out;
  out.reserve(iso.group().order());
  for (std::size_t g = 0; g < iso.group().order(); ++g) out.push_back(iso.sigma(g)(alpha));
  return out;
}

bool vanishes_across_orbits(const KMatrix& m, const group::OrbitPartition& orbits) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (orbits.block_of[i] != orbits.block_of[j] && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::vector<SigndetReport> block_reports(const KMatrix& m, const group::GroupFieldIso& iso,
                                         const group::OrbitPartition& orbits) {
  std::vector<SigndetReport> out;
  for (const auto& block : orbits.blocks) {
    out.push_back(check_signdet_block(m, iso, block));
    if (out.back().lemma_violated) {
      throw Error(ErrorKind::internal_inconsistency, "Lemma hypotheses hold on an orbit block with zero determinant",
                  "determinant");
    }
  }
  return out;
}

FieldElement nonzero_determinant(const KMatrix& m) {
  return staged("determinant", [&] {
    FieldElement det = forms::det_exact(m);
    if (det.is_zero()) {
      throw Error(ErrorKind::internal_inconsistency,
                  "coordinate matrix is singular for a normal alpha; the isomorphism input is inconsistent");
    }
    return det;
  });
}

}  // namespace

std::string to_string(Construction c) { return c == Construction::permutation ? "permutation" : "signed"; }

ConstructionRequest parse_construction(const std::string& text) {
  if (text == "auto") return ConstructionRequest::automatic;
  if (text == "permutation") return ConstructionRequest::permutation;
  if (text == "signed") return ConstructionRequest::signed_perm;
  throw Error(ErrorKind::parse, "unknown construction '" + text + "' (expected auto, permutation or signed)");
}

bool check_invariance(const group::GroupFieldIso& iso, const std::vector<LinearForm>& ys) {
  for (std::size_t g = 0; g < iso.group().order(); ++g) {
    for (const auto& y : ys) {
      if (!(forms::act_linear(iso, g, y) == y)) return false;
    }
  }
  return true;
}

bool check_invariance(const group::GroupFieldIso& iso, const std::vector<AffineForm>& ys) {
  for (std::size_t g = 0; g < iso.group().order(); ++g) {
    for (const auto& y : ys) {
      if (!(forms::act_affine(iso, g, y) == y)) return false;
    }
  }
  return true;
}

bool check_roundtrip(const std::vector<LinearForm>& ys, const KMatrix& inverse) {
  const std::size_t n = ys.size();
  if (inverse.rows() != n || inverse.cols() != n) return false;
  std::vector<LinearForm> x_in_y;
  for (std::size_t j = 0; j < n; ++j) x_in_y.push_back({inverse.row(j)});
  for (std::size_t i = 0; i < n; ++i) {
    if (!(forms::substitute(ys[i], x_in_y) == LinearForm::unit(inverse.field(), n, i))) return false;
  }
  return true;
}

bool check_roundtrip(const std::vector<AffineForm>& ys, const KMatrix& inverse) {
  const std::size_t n = ys.size();
  if (inverse.rows() != n || inverse.cols() != n) return false;
  const auto& k = inverse.field();
  std::vector<AffineForm> z_in_y;
  for (std::size_t j = 0; j < n; ++j) {
    AffineForm z{FieldElement::zero(k), inverse.row(j)};
    for (std::size_t l = 0; l < n; ++l) z.constant -= inverse(j, l) * ys[l].constant;
    z_in_y.push_back(std::move(z));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(forms::substitute(ys[i], z_in_y) == AffineForm::unit(k, n, i))) return false;
  }
  return true;
}

RationalityCertificate build_permutation(const group::GroupFieldIso& iso, const FieldElement& alpha) {
  const auto& group = iso.group();
  if (group::classify(group) != group::Classification::pure_permutation) {
    throw Error(ErrorKind::classification, "permutation construction needs a group of permutation matrices", "build");
  }
  require_normal(iso, alpha);
  const auto& k = iso.field();
  const std::size_t n = group.dimension();
  const auto table = group::coset_table(group);
  const auto conj = conjugates_of(iso, alpha);

  KMatrix m(k, n, n);
  std::vector<LinearForm> ys;
  for (std::size_t i = 0; i < n; ++i) {
    LinearForm y = LinearForm::zero(k, n);
    for (std::size_t j = 0; j < n; ++j) {
      y.coefficients[j] = conjugate_sum(conj, table.all(i, j), k);
      m(i, j) = y.coefficients[j];
    }
    ys.push_back(std::move(y));
  }
  FieldElement det = nonzero_determinant(m);
  const bool invariant = check_invariance(iso, ys);
  if (!invariant) throw Error(ErrorKind::internal_inconsistency, "a y_i is not invariant", "invariance");
  KMatrix inv = staged("roundtrip", [&] { return forms::invert_exact(m); });
  if (!check_roundtrip(ys, inv)) throw Error(ErrorKind::internal_inconsistency, "round trip failed", "roundtrip");

  auto orbits = group::orbits(group);
  const bool block_diag = vanishes_across_orbits(m, orbits);
  auto reports = block_reports(m, iso, orbits);
  return RationalityCertificate{Construction::permutation, alpha,  std::move(ys), {},
                                std::move(m),             std::nullopt, {},         std::move(det),
                                std::move(inv),           true,   true,          block_diag,
                                std::move(orbits),        std::move(reports)};
}

RationalityCertificate build_signed(const group::GroupFieldIso& iso, const FieldElement& alpha) {
  require_normal(iso, alpha);
  const auto& group = iso.group();
  const auto& k = iso.field();
  const std::size_t n = group.dimension();
  const auto table = group::coset_table(group);
  const auto conj = conjugates_of(iso, alpha);

  KMatrix m(k, n, n);
  KMatrix augmented(k, n + 1, n + 1);
  augmented(0, 0) = FieldElement::one(k);
  std::vector<AffineForm> ys;
  std::vector<FieldElement> constants;
  for (std::size_t i = 0; i < n; ++i) {
    AffineForm y = AffineForm::zero(k, n);
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElement minus = conjugate_sum(conj, table.minus(i, j), k);
      y.constant += minus;
      y.coefficients[j] = conjugate_sum(conj, table.plus(i, j), k) - minus;
      m(i, j) = y.coefficients[j];
      augmented(i + 1, j + 1) = y.coefficients[j];
    }
    augmented(i + 1, 0) = y.constant;
    constants.push_back(y.constant);
    ys.push_back(std::move(y));
  }
  FieldElement det = nonzero_determinant(m);
  const bool invariant = check_invariance(iso, ys);
  if (!invariant) throw Error(ErrorKind::internal_inconsistency, "a y_i is not invariant", "invariance");
  KMatrix inv = staged("roundtrip", [&] { return forms::invert_exact(m); });
  if (!check_roundtrip(ys, inv)) throw Error(ErrorKind::internal_inconsistency, "round trip failed", "roundtrip");

  auto orbits = group::orbits(group);
  const bool block_diag = vanishes_across_orbits(m, orbits);
  auto reports = block_reports(m, iso, orbits);
  return RationalityCertificate{Construction::signed_perm, alpha,         {},           std::move(ys),
                                std::move(m),             std::move(augmented), std::move(constants), std::move(det),
                                std::move(inv),           true,          true,         block_diag,
                                std::move(orbits),        std::move(reports)};
}

RationalityCertificate certify(const group::GroupFieldIso& iso, const FieldElement& alpha,
                               ConstructionRequest construction) {
  if (construction == ConstructionRequest::automatic) {
    construction = group::classify(iso.group()) == group::Classification::pure_permutation
                       ? ConstructionRequest::permutation
                       : ConstructionRequest::signed_perm;
  }
  return staged("build", [&] {
    return construction == ConstructionRequest::permutation ? build_permutation(iso, alpha) : build_signed(iso, alpha);
  });
}

ProductInY product_in_y(const RationalityCertificate& cert) {
  if (cert.construction != Construction::permutation) {
    throw Error(ErrorKind::usage, "product_in_y needs a permutation certificate");
  }
  std::vector<LinearForm> x_in_y;
  for (std::size_t j = 0; j < cert.inverse.rows(); ++j) x_in_y.push_back({cert.inverse.row(j)});
  auto poly = forms::expand_product(x_in_y);
  const bool in_base = forms::coefficients_in_base(poly);
  return {std::move(poly), in_base};
}

}  // namespace noname::core
