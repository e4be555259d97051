#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "noname/group/signed_perm.hpp"

namespace noname::group {

/// Finite subgroup of B_n closed from generators. Element 0 is the identity;
/// the rest follow breadth-first discovery order over the generators.
class MatrixGroup {
 public:
  /// How element k was first reached: element(k) = generator(generator) * element(parent).
  struct Derivation {
    std::size_t parent;
    std::size_t generator;
  };

  std::size_t dimension() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const SignedPermElement& element(std::size_t k) const { return elements_[k]; }
  const std::vector<SignedPermElement>& elements() const { return elements_; }
  const std::vector<SignedPermElement>& generators() const { return generators_; }
  const std::vector<Derivation>& derivations() const { return derivations_; }

  std::optional<std::size_t> index_of(const SignedPermElement& g) const;
  std::size_t generator_index(std::size_t generator) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  bool has_table() const { return !table_.empty(); }

  friend MatrixGroup close_group(const std::vector<IntMatrix>& generators, std::size_t cap, std::size_t dimension);

 private:
  std::size_t n_ = 0;
  std::vector<SignedPermElement> elements_;
  std::vector<SignedPermElement> generators_;
  std::vector<Derivation> derivations_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::uint32_t> table_;  // row-major, filled when order <= kTableLimit
  std::vector<std::size_t> inverses_;
};

inline constexpr std::size_t kDefaultClosureCap = 20000;
inline constexpr std::size_t kTableLimit = 4096;

/// Breadth-first product closure. `dimension` is only consulted when the
/// generator list is empty. Throws Error(classification) for a generator
/// outside B_n and Error(finiteness_cap) when the closure exceeds `cap`.
MatrixGroup close_group(const std::vector<IntMatrix>& generators, std::size_t cap = kDefaultClosureCap,
                        std::size_t dimension = 0);

enum class Classification { pure_permutation, signed_permutation };

Classification classify(const MatrixGroup& group);
std::string to_string(Classification c);

/// Orbits of i -> rho_g(i); blocks sorted by smallest member, which is the
/// representative.
struct OrbitPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;

  std::size_t representative(std::size_t block) const { return blocks[block].front(); }
  bool transitive() const { return blocks.size() == 1; }
};

OrbitPartition orbits(const MatrixGroup& group);

/// G+_{i,j}, G-_{i,j} and their union G_{i,j} as roster index lists.
class CosetTable {
 public:
  explicit CosetTable(std::size_t n) : n_(n), plus_(n * n), minus_(n * n) {}

  std::size_t dimension() const { return n_; }
  const std::vector<std::size_t>& plus(std::size_t i, std::size_t j) const { return plus_[i * n_ + j]; }
  const std::vector<std::size_t>& minus(std::size_t i, std::size_t j) const { return minus_[i * n_ + j]; }
  std::vector<std::size_t> all(std::size_t i, std::size_t j) const;

  void add(std::size_t i, std::size_t j, int sign, std::size_t element);

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> plus_;
  std::vector<std::vector<std::size_t>> minus_;
};

CosetTable coset_table(const MatrixGroup& group);

/// G_{i,i}: elements with rho_g(i) = i, either sign. Verified closed.
std::vector<std::size_t> stabilizer(const MatrixGroup& group, std::size_t i);
/// G+_{i,i}: elements fixing e_i exactly. Verified closed.
std::vector<std::size_t> signed_stabilizer(const MatrixGroup& group, std::size_t i);

bool is_closed_subset(const MatrixGroup& group, const std::vector<std::size_t>& subset);

}  // namespace noname::group
