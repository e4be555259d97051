#include "noname/error.hpp"

namespace noname {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::arithmetic: return "arithmetic";
    case ErrorKind::usage: return "usage";
    case ErrorKind::parse: return "parse";
    case ErrorKind::classification: return "classification";
    case ErrorKind::finiteness_cap: return "finiteness-cap";
    case ErrorKind::iso: return "iso";
    case ErrorKind::normality: return "normality";
    case ErrorKind::search_failure: return "search-failure";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::singular_matrix: return "singular-matrix";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::verification: return "verification";
  }
  return "unknown";
}

}  // namespace noname
