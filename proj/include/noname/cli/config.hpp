#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "noname/core/certificate.hpp"
#include "noname/forms/render.hpp"
#include "noname/group/iso.hpp"

namespace noname::cli {

struct GeneratorSpec {
  group::IntMatrix matrix;
  std::vector<exact::Rational> automorphism_image;
};

/// Problem description file. Coefficients are JSON integers or "p/q"
/// strings, lowest degree first.
struct ProblemConfig {
  exact::BaseField base = exact::BaseField::rationals();
  std::vector<exact::Rational> modulus;
  std::string generator_name = "t";
  forms::RenderBasis render_basis = forms::RenderBasis::power;
  std::vector<GeneratorSpec> generators;
  std::size_t dimension = 0;
  std::optional<std::vector<exact::Rational>> alpha;
  core::ConstructionRequest construction = core::ConstructionRequest::automatic;
  std::uint64_t seed = 1;
  std::size_t closure_cap = group::kDefaultClosureCap;
  std::size_t max_tries = 100000;
  bool trust_irreducible = false;
};

/// Throws Error(parse) on any schema violation.
ProblemConfig parse_config(const nlohmann::json& j);
ProblemConfig load_config(const std::string& path);
nlohmann::json load_json(const std::string& path);

/// Field, group, Galois presentation and the bound isomorphism.
struct Problem {
  ProblemConfig config;
  field::Field field;
  group::GroupFieldIso iso;
  forms::RenderOptions render;
};

/// Errors carry stage tags "field", "group", "galois" or "iso".
Problem build_problem(const ProblemConfig& config);

/// Element of `field` from its power-basis coordinates.
field::FieldElement element_from(const field::Field& field, const std::vector<exact::Rational>& coords);

/// Parses "t^2+2*t-1"-style text in `symbol`. Throws Error(parse).
exact::UniPoly parse_poly(const exact::BaseField& base, const std::string& text, const std::string& symbol = "t");
/// Parses "t^2+2*t-1"-style text in `symbol`. Throws Error(parse).
field::FieldElement parse_element(const field::Field& field, const std::string& text, const std::string& symbol = "t");

}  // namespace noname::cli
