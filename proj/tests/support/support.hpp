#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "noname/cli/config.hpp"
#include "noname/core/certificate.hpp"

namespace testing {

using namespace noname;
using exact::BaseField;
using exact::PrimeFieldElement;
using exact::Rational;
using exact::Scalar;
using exact::UniPoly;
using field::Field;
using field::FieldElement;
using forms::KMatrix;

inline std::string fixture_path(const std::string& name) { return std::string(NONAME_FIXTURE_DIR) + "/" + name; }

inline cli::Problem load_fixture(const std::string& name) {
  return cli::build_problem(cli::load_config(fixture_path(name)));
}

inline std::vector<std::string> fixture_names() {
  return {"c4_signed.json", "d8.json", "c2_swap.json", "c2_sign.json", "c2_swap_f4.json", "trivial.json"};
}

inline Field make_field(const BaseField& base, const std::vector<long>& coeffs, bool trust = false) {
  return field::FieldDescriptor::create(UniPoly::from_ints(base, coeffs), {trust});
}

inline Field cyclotomic5() { return make_field(BaseField::rationals(), {1, 1, 1, 1, 1}); }
inline Field sqrt2() { return make_field(BaseField::rationals(), {-2, 0, 1}); }

inline Rational random_rational(std::mt19937_64& rng, long h = 9) {
  std::uniform_int_distribution<long> num(-h, h);
  std::uniform_int_distribution<long> den(1, h);
  return Rational(num(rng), den(rng));
}

inline Scalar random_scalar(const BaseField& base, std::mt19937_64& rng, long h = 9) {
  if (base.is_rational()) return Scalar(random_rational(rng, h));
  std::uniform_int_distribution<long> r(0, static_cast<long>(base.characteristic()) - 1);
  return Scalar::from_int(base, r(rng));
}

inline UniPoly random_poly(const BaseField& base, std::size_t max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Scalar> c(deg(rng) + 1);
  for (auto& s : c) s = random_scalar(base, rng);
  return UniPoly(base, c);
}

inline FieldElement random_element(const Field& k, std::mt19937_64& rng, long h = 9) {
  std::vector<Scalar> c(k->degree());
  for (auto& s : c) s = random_scalar(k->base(), rng, h);
  return FieldElement(k, c);
}

/// Sum over all permutations; independent of the elimination routine.
inline FieldElement leibniz_det(const KMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = FieldElement::zero(m.field());
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    auto term = FieldElement::one(m.field());
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank of a list of base-field vectors by plain row reduction.
inline std::size_t oracle_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      const Scalar f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

/// Nullspace oracle: the conjugates of alpha are independent iff the
/// homogeneous system sum_g c_g coords(g(alpha)) = 0 has only the trivial
/// solution, i.e. the coordinate rows have full rank.
inline bool oracle_normal(const FieldElement& alpha, const field::GaloisPresentation& p) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& s : p.automorphisms) rows.push_back(field::coords_over_base(s(alpha)));
  return p.order() == alpha.field()->degree() && oracle_rank(rows) == rows.size();
}

inline FieldElement power(const Field& k, unsigned e) {
  return FieldElement::generator(k).pow(mpz_class(e));
}

}  // namespace testing
