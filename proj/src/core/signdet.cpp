#include "noname/core/signdet.hpp"

#include <numeric>

#include "noname/error.hpp"
#include "noname/field/galois.hpp"

namespace noname::core {

namespace {

/// +1 / -1 when a == s * b for that sign, 0 when neither; zero vectors match +1.
int sign_relation(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a == b) return 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] == -b[k])) return 0;
  }
  return -1;
}

}  // namespace

SigndetReport check_signdet_block(const KMatrix& m, const group::GroupFieldIso& iso,
                                  const std::vector<std::size_t>& indices) {
  if (!m.square()) throw Error(ErrorKind::usage, "Lemma check needs a square matrix");
  if (m.rows() != iso.group().dimension()) throw Error(ErrorKind::usage, "matrix size differs from group dimension");
  const std::size_t k = indices.size();
  std::vector<std::size_t> position(m.rows(), m.rows());
  for (std::size_t r = 0; r < k; ++r) position[indices[r]] = r;

  KMatrix block(m.field(), k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) block(r, c) = m(indices[r], indices[c]);
  }

  SigndetReport report;
  report.indices = indices;
  report.determinant = forms::det_exact(block);
  report.det_nonzero = !report.determinant->is_zero();

  report.columns_permuted = true;
  const auto& group = iso.group();
  for (std::size_t g = 0; g < group.order() && report.columns_permuted; ++g) {
    const auto& sigma = iso.sigma(g);
    const auto& elem = group.element(g);
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t target = elem.image(indices[c]);
      if (position[target] == m.rows()) {
        report.columns_permuted = false;
        report.failure = "index set is not stable under group element " + std::to_string(g);
        break;
      }
      std::vector<FieldElement> moved;
      for (auto e : block.column(c)) moved.push_back(sigma(e));
      if (sign_relation(moved, block.column(position[target])) == 0) {
        report.columns_permuted = false;
        report.failure = "group element " + std::to_string(g) + " does not send column " +
                         std::to_string(indices[c] + 1) + " to +-column " + std::to_string(target + 1);
        break;
      }
    }
  }

  report.first_column_independent = k > 0 && field::independent_over_base(block.column(0));
  if (report.failure.empty() && !report.first_column_independent) {
    report.failure = "first column entries are linearly dependent over the base field";
  }
  report.lemma_applies = report.columns_permuted && report.first_column_independent;
  report.lemma_violated = report.lemma_applies && !report.det_nonzero;
  return report;
}

SigndetReport check_signdet_hypotheses(const KMatrix& m, const group::GroupFieldIso& iso) {
  std::vector<std::size_t> all(m.rows());
  std::iota(all.begin(), all.end(), 0);
  return check_signdet_block(m, iso, all);
}

}  // namespace noname::core
