#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace noname::group {

using IntMatrix = std::vector<std::vector<long>>;
using Permutation = std::vector<std::size_t>;

/// Signed permutation matrix g stored as (rho_g, signs) with
/// g(e_i) = signs[i] * e_{perm[i]}. Indices are 0-based.
class SignedPermElement {
 public:
  SignedPermElement(Permutation perm, std::vector<int> signs);

  static SignedPermElement identity(std::size_t n);
  /// Throws Error(classification) unless every row and column has exactly
  /// one nonzero entry and that entry is +-1.
  static SignedPermElement from_matrix(const IntMatrix& m);

  std::size_t dimension() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  std::size_t image(std::size_t i) const { return perm_[i]; }
  int sign(std::size_t i) const { return signs_[i]; }

  IntMatrix to_matrix() const;
  bool is_identity() const;
  bool is_unsigned() const;
  /// Identity permutation part (a diagonal sign matrix).
  bool is_diagonal() const;

  /// Matrix product: (g * h)(e_i) = g(h(e_i)).
  SignedPermElement operator*(const SignedPermElement& rhs) const;
  SignedPermElement inverse() const;

  friend bool operator==(const SignedPermElement&, const SignedPermElement&) = default;

  /// Hashable encoding: sign * (perm + 1) per column.
  std::string key() const;

 private:
  Permutation perm_;
  std::vector<int> signs_;
};

Permutation rho(const SignedPermElement& g);

std::string render_matrix(const IntMatrix& m);

}  // namespace noname::group
