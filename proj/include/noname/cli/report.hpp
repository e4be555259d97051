#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "noname/cli/config.hpp"
#include "noname/core/certificate.hpp"

namespace noname::cli {

inline constexpr int kReportSchema = 1;

struct AlphaInfo {
  field::FieldElement value;
  bool searched = false;
  std::uint64_t seed = 0;
};

struct Timings {
  double field_ms = 0;
  double group_ms = 0;
  double certificate_ms = 0;
};

struct Outcome {
  AlphaInfo alpha;
  core::RationalityCertificate certificate;
  std::optional<core::ProductInY> product;
};

/// Keys come out sorted, so equal inputs give byte-identical dumps.
nlohmann::json make_report(const Problem& problem, const Outcome& outcome, const std::optional<Timings>& timings);

std::string text_report(const Problem& problem, const Outcome& outcome, const std::optional<Timings>& timings,
                        bool color);

/// The y-forms a certificate matrix encodes: rows of M, or rows 2.. of M*.
std::vector<forms::LinearForm> linear_forms_of(const forms::KMatrix& m);
std::vector<forms::AffineForm> affine_forms_of(const forms::KMatrix& augmented);

}  // namespace noname::cli
