#pragma once

#include <cstdint>
#include <vector>

#include "noname/forms/kmatrix.hpp"

namespace noname::core {

/// Moore matrix m_{i,j} = alpha_i^(q^(j-1)) over K = F_q[t]/(m), q prime.
struct MooreInstance {
  forms::Field field;
  std::uint64_t q;
  std::vector<forms::FieldElement> tuple;
  forms::KMatrix matrix;
};

/// Throws Error(usage) if the base is not a prime field or the tuple is
/// longer than the extension degree.
MooreInstance moore_matrix(const forms::Field& field, const std::vector<forms::FieldElement>& tuple);

}  // namespace noname::core
