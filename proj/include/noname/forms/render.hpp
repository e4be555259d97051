#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "noname/forms/kmatrix.hpp"
#include "noname/forms/multipoly.hpp"

namespace noname::forms {

enum class Style { text, json };

/// Which monomials field elements are written in: 1, t, ..., t^(d-1)
/// (power) or t, t^2, ..., t^d (shifted; the usual basis for cyclotomic
/// fields).
enum class RenderBasis { power, shifted };

struct RenderOptions {
  std::string symbol = "t";
  RenderBasis basis = RenderBasis::power;
};

/// Compact text, e.g. "r5^3+r5^4" or "1/2−t"; "0" for zero.
std::string render_element(const FieldElement& a, const RenderOptions& opts = {});
/// "(c1)·x1 + x2"; "0" for the zero form.
std::string render_linear(const LinearForm& f, const RenderOptions& opts = {}, std::string_view var = "x");
/// "(c) + (m1)·z1 + ..."; "0" for the zero form.
std::string render_affine(const AffineForm& f, const RenderOptions& opts = {}, std::string_view var = "z");
/// An affine z-form rewritten through z_j = 1/(1 + x_j).
std::string render_affine_in_x(const AffineForm& f, const RenderOptions& opts = {});
std::string render_matrix(const KMatrix& m, const RenderOptions& opts = {});
std::string render_poly(const MultiPoly& p, const RenderOptions& opts = {}, std::string_view var = "y");

/// Power-basis coordinates as strings ("n" or "n/d").
nlohmann::json to_json(const FieldElement& a);
nlohmann::json to_json(const LinearForm& f);
nlohmann::json to_json(const AffineForm& f);
nlohmann::json to_json(const KMatrix& m);
nlohmann::json to_json(const MultiPoly& p);

/// Inverse of to_json(FieldElement). Accepts numbers or "p/q" strings.
/// Throws Error(parse) on malformed input or a length above the degree.
FieldElement element_from_json(const Field& field, const nlohmann::json& j);

std::string render(const LinearForm& f, Style style, const RenderOptions& opts = {});
std::string render(const AffineForm& f, Style style, const RenderOptions& opts = {});
std::string render(const KMatrix& m, Style style, const RenderOptions& opts = {});
std::string render(const MultiPoly& p, Style style, const RenderOptions& opts = {});

}  // namespace noname::forms
