#include "noname/forms/render.hpp"

#include "noname/error.hpp"

namespace noname::forms {

namespace {

constexpr std::string_view kMinus = "−";
constexpr std::string_view kDot = "·";

/// Terms as (coefficient, power) in the requested basis.
std::vector<std::pair<exact::Scalar, std::size_t>> basis_terms(const FieldElement& a, RenderBasis basis) {
  std::vector<std::pair<exact::Scalar, std::size_t>> out;
  if (basis == RenderBasis::power || a.in_base()) {
    const auto& c = a.coords();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_zero()) out.emplace_back(c[k], k);
    }
    return out;
  }
  // a = t * (a / t): coordinates of a/t shift up by one power.
  const FieldElement shifted = a / FieldElement::generator(a.field());
  const auto& c = shifted.coords();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out.emplace_back(c[k], k + 1);
  }
  return out;
}

std::size_t term_count(const FieldElement& a, RenderBasis basis) { return basis_terms(a, basis).size(); }

/// Coefficients that need wrapping before a "·variable" suffix.
bool needs_parens(const FieldElement& a, const RenderOptions& opts) {
  const auto s = render_element(a, opts);
  return term_count(a, opts.basis) > 1 || s.rfind(kMinus, 0) == 0;
}

std::string times_variable(const FieldElement& c, const RenderOptions& opts, const std::string& variable) {
  if (c.is_one()) return variable;
  const auto s = render_element(c, opts);
  return (needs_parens(c, opts) ? "(" + s + ")" : s) + std::string(kDot) + variable;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) out += " + " + terms[k];
  return out;
}

}  // namespace

std::string render_element(const FieldElement& a, const RenderOptions& opts) {
  const auto terms = basis_terms(a, opts.basis);
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [coeff, k] : terms) {
    std::string mag = coeff.to_signed_string();
    const bool negative = mag.front() == '-';
    if (negative) mag.erase(0, 1);
    std::string mono;
    if (k == 0) {
      mono = mag;
    } else {
      const std::string power = k == 1 ? opts.symbol : opts.symbol + "^" + std::to_string(k);
      mono = mag == "1" ? power : mag + "*" + power;
    }
    if (out.empty()) {
      out = negative ? std::string(kMinus) + mono : mono;
    } else {
      out += negative ? std::string(kMinus) : std::string("+");
      out += mono;
    }
  }
  return out;
}

std::string render_linear(const LinearForm& f, const RenderOptions& opts, std::string_view var) {
  std::vector<std::string> terms;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f.coefficients[j].is_zero()) continue;
    terms.push_back(times_variable(f.coefficients[j], opts, std::string(var) + std::to_string(j + 1)));
  }
  return join_terms(terms);
}

std::string render_affine(const AffineForm& f, const RenderOptions& opts, std::string_view var) {
  std::vector<std::string> terms;
  if (!f.constant.is_zero()) {
    const auto s = render_element(f.constant, opts);
    terms.push_back(needs_parens(f.constant, opts) ? "(" + s + ")" : s);
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f.coefficients[j].is_zero()) continue;
    terms.push_back(times_variable(f.coefficients[j], opts, std::string(var) + std::to_string(j + 1)));
  }
  return join_terms(terms);
}

std::string render_affine_in_x(const AffineForm& f, const RenderOptions& opts) {
  std::vector<std::string> terms;
  if (!f.constant.is_zero()) {
    const auto s = render_element(f.constant, opts);
    terms.push_back(needs_parens(f.constant, opts) ? "(" + s + ")" : s);
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto& c = f.coefficients[j];
    if (c.is_zero()) continue;
    const std::string denom = "/(1+x" + std::to_string(j + 1) + ")";
    const auto s = render_element(c, opts);
    terms.push_back((needs_parens(c, opts) ? "(" + s + ")" : s) + denom);
  }
  return join_terms(terms);
}

std::string render_matrix(const KMatrix& m, const RenderOptions& opts) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += " | ";
      out += render_element(m(r, c), opts);
    }
    out += " ]\n";
  }
  return out;
}

std::string render_poly(const MultiPoly& p, const RenderOptions& opts, std::string_view var) {
  std::vector<std::string> terms;
  // Descending lexicographic order of exponents reads naturally (y1^n first).
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var) + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      terms.push_back(render_element(c, opts));
    } else {
      terms.push_back(times_variable(c, opts, mono));
    }
  }
  return join_terms(terms);
}

nlohmann::json to_json(const FieldElement& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : a.coords()) j.push_back(c.to_string());
  return j;
}

nlohmann::json to_json(const LinearForm& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coefficients) coeffs.push_back(to_json(c));
  return {{"coefficients", coeffs}};
}

nlohmann::json to_json(const AffineForm& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coefficients) coeffs.push_back(to_json(c));
  return {{"constant", to_json(f.constant)}, {"coefficients", coeffs}};
}

nlohmann::json to_json(const KMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", to_json(c)}});
  return {{"variables", p.variables()}, {"terms", terms}};
}

FieldElement element_from_json(const Field& field, const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "field element must be a coefficient array");
  if (j.size() > field->degree()) {
    throw Error(ErrorKind::parse, "field element has " + std::to_string(j.size()) + " coefficients, field degree is " +
                                      std::to_string(field->degree()));
  }
  std::vector<exact::Scalar> coords;
  for (const auto& c : j) {
    exact::Rational q;
    if (c.is_number_integer()) {
      q = exact::Rational(c.get<long>());
    } else if (c.is_string()) {
      q = exact::Rational::parse(c.get<std::string>());
    } else {
      throw Error(ErrorKind::parse, "coefficient must be an integer or a \"p/q\" string");
    }
    coords.push_back(exact::Scalar::from_rational(field->base(), q));
  }
  return FieldElement(field, std::move(coords));
}

std::string render(const LinearForm& f, Style style, const RenderOptions& opts) {
  return style == Style::json ? to_json(f).dump() : render_linear(f, opts);
}

std::string render(const AffineForm& f, Style style, const RenderOptions& opts) {
  return style == Style::json ? to_json(f).dump() : render_affine(f, opts);
}

std::string render(const KMatrix& m, Style style, const RenderOptions& opts) {
  return style == Style::json ? to_json(m).dump() : render_matrix(m, opts);
}

std::string render(const MultiPoly& p, Style style, const RenderOptions& opts) {
  return style == Style::json ? to_json(p).dump() : render_poly(p, opts);
}

}  // namespace noname::forms
