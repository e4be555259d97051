#include "noname/group/signed_perm.hpp"

#include <cstdint>

#include "noname/error.hpp"

namespace noname::group {

SignedPermElement::SignedPermElement(Permutation perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw Error(ErrorKind::usage, "permutation and sign vector lengths differ");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] >= perm_.size() || seen[perm_[i]]) throw Error(ErrorKind::usage, "not a permutation");
    seen[perm_[i]] = true;
    if (signs_[i] != 1 && signs_[i] != -1) throw Error(ErrorKind::usage, "signs must be +1 or -1");
  }
}

SignedPermElement SignedPermElement::identity(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return {std::move(p), std::vector<int>(n, 1)};
}

SignedPermElement SignedPermElement::from_matrix(const IntMatrix& m) {
  const std::size_t n = m.size();
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::classification, "matrix " + render_matrix(m) + " is not a signed permutation matrix: " + why);
  };
  for (const auto& row : m) {
    if (row.size() != n) fail("not square");
  }
  Permutation perm(n);
  std::vector<int> signs(n);
  std::vector<bool> row_used(n, false);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t hits = 0;
    for (std::size_t row = 0; row < n; ++row) {
      const long v = m[row][col];
      if (v == 0) continue;
      if (v != 1 && v != -1) fail("entry " + std::to_string(v));
      ++hits;
      perm[col] = row;
      signs[col] = static_cast<int>(v);
    }
    if (hits != 1) fail("column " + std::to_string(col + 1) + " has " + std::to_string(hits) + " nonzero entries");
    if (row_used[perm[col]]) fail("row " + std::to_string(perm[col] + 1) + " used twice");
    row_used[perm[col]] = true;
  }
  return {std::move(perm), std::move(signs)};
}

IntMatrix SignedPermElement::to_matrix() const {
  const std::size_t n = perm_.size();
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[perm_[i]][i] = signs_[i];
  return m;
}

bool SignedPermElement::is_identity() const { return is_diagonal() && is_unsigned(); }

bool SignedPermElement::is_unsigned() const {
  for (int s : signs_) {
    if (s != 1) return false;
  }
  return true;
}

bool SignedPermElement::is_diagonal() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

SignedPermElement SignedPermElement::operator*(const SignedPermElement& rhs) const {
  if (rhs.dimension() != dimension()) throw Error(ErrorKind::usage, "dimension mismatch in group product");
  const std::size_t n = perm_.size();
  Permutation p(n);
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = perm_[rhs.perm_[i]];
    s[i] = rhs.signs_[i] * signs_[rhs.perm_[i]];
  }
  return {std::move(p), std::move(s)};
}

SignedPermElement SignedPermElement::inverse() const {
  const std::size_t n = perm_.size();
  Permutation p(n);
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[perm_[i]] = i;
    s[perm_[i]] = signs_[i];
  }
  return {std::move(p), std::move(s)};
}

std::string SignedPermElement::key() const {
  std::string k;
  k.reserve(perm_.size() * sizeof(std::int32_t));
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const auto v = static_cast<std::int32_t>(signs_[i] * static_cast<long>(perm_[i] + 1));
    k.append(reinterpret_cast<const char*>(&v), sizeof v);
  }
  return k;
}

Permutation rho(const SignedPermElement& g) { return g.perm(); }

std::string render_matrix(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (c) out += ",";
      out += std::to_string(m[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace noname::group
