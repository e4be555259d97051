#include "noname/group/matrix_group.hpp"

#include <algorithm>

#include "noname/error.hpp"

namespace noname::group {

std::optional<std::size_t> MatrixGroup::index_of(const SignedPermElement& g) const {
  const auto it = lookup_.find(g.key());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::generator_index(std::size_t generator) const { return *index_of(generators_.at(generator)); }

std::size_t MatrixGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order() + b];
  return *index_of(elements_[a] * elements_[b]);
}

MatrixGroup close_group(const std::vector<IntMatrix>& generators, std::size_t cap, std::size_t dimension) {
  MatrixGroup g;
  for (const auto& m : generators) g.generators_.push_back(SignedPermElement::from_matrix(m));
  g.n_ = g.generators_.empty() ? dimension : g.generators_.front().dimension();
  for (const auto& gen : g.generators_) {
    if (gen.dimension() != g.n_) throw Error(ErrorKind::usage, "generators have different dimensions");
  }
  g.elements_.push_back(SignedPermElement::identity(g.n_));
  g.derivations_.push_back({0, 0});
  g.lookup_.emplace(g.elements_.front().key(), 0);
  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (std::size_t s = 0; s < g.generators_.size(); ++s) {
      SignedPermElement next = g.generators_[s] * g.elements_[k];
      auto key = next.key();
      if (g.lookup_.count(key)) continue;
      if (g.elements_.size() >= cap) {
        throw Error(ErrorKind::finiteness_cap, "group closure exceeds " + std::to_string(cap) + " elements");
      }
      g.lookup_.emplace(std::move(key), g.elements_.size());
      g.elements_.push_back(std::move(next));
      g.derivations_.push_back({k, s});
    }
  }
  const std::size_t order = g.elements_.size();
  if (order <= kTableLimit) {
    g.table_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        g.table_[a * order + b] = static_cast<std::uint32_t>(*g.index_of(g.elements_[a] * g.elements_[b]));
      }
    }
  }
  g.inverses_.resize(order);
  for (std::size_t a = 0; a < order; ++a) g.inverses_[a] = *g.index_of(g.elements_[a].inverse());
  return g;
}

Classification classify(const MatrixGroup& group) {
  for (const auto& e : group.elements()) {
    if (!e.is_unsigned()) return Classification::signed_permutation;
  }
  return Classification::pure_permutation;
}

std::string to_string(Classification c) {
  return c == Classification::pure_permutation ? "pure_permutation" : "signed";
}

OrbitPartition orbits(const MatrixGroup& group) {
  const std::size_t n = group.dimension();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  OrbitPartition out{{}, std::vector<std::size_t>(n, unset)};
  for (std::size_t i = 0; i < n; ++i) {
    if (out.block_of[i] != unset) continue;
    const std::size_t b = out.blocks.size();
    std::vector<std::size_t> block{i};
    out.block_of[i] = b;
    for (std::size_t k = 0; k < block.size(); ++k) {
      for (const auto& g : group.generators()) {
        const std::size_t j = g.image(block[k]);
        if (out.block_of[j] == unset) {
          out.block_of[j] = b;
          block.push_back(j);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<std::size_t> CosetTable::all(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out = plus(i, j);
  const auto& m = minus(i, j);
  out.insert(out.end(), m.begin(), m.end());
  std::sort(out.begin(), out.end());
  return out;
}

void CosetTable::add(std::size_t i, std::size_t j, int sign, std::size_t element) {
  (sign > 0 ? plus_ : minus_)[i * n_ + j].push_back(element);
}

CosetTable coset_table(const MatrixGroup& group) {
  const std::size_t n = group.dimension();
  CosetTable table(n);
  for (std::size_t k = 0; k < group.order(); ++k) {
    const auto& g = group.element(k);
    for (std::size_t i = 0; i < n; ++i) table.add(i, g.image(i), g.sign(i), k);
  }
  return table;
}

bool is_closed_subset(const MatrixGroup& group, const std::vector<std::size_t>& subset) {
  std::vector<bool> member(group.order(), false);
  for (auto k : subset) member[k] = true;
  for (auto a : subset) {
    if (!member[group.inverse(a)]) return false;
    for (auto b : subset) {
      if (!member[group.mul(a, b)]) return false;
    }
  }
  return member[0];
}

namespace {

std::vector<std::size_t> checked(const MatrixGroup& group, std::vector<std::size_t> subset) {
  if (!is_closed_subset(group, subset)) {
    throw Error(ErrorKind::internal_inconsistency, "stabilizer is not closed under the group law");
  }
  return subset;
}

}  // namespace

std::vector<std::size_t> stabilizer(const MatrixGroup& group, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < group.order(); ++k) {
    if (group.element(k).image(i) == i) out.push_back(k);
  }
  return checked(group, std::move(out));
}

std::vector<std::size_t> signed_stabilizer(const MatrixGroup& group, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < group.order(); ++k) {
    const auto& g = group.element(k);
    if (g.image(i) == i && g.sign(i) == 1) out.push_back(k);
  }
  return checked(group, std::move(out));
}

}  // namespace noname::group
