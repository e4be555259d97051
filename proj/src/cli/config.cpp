#include "noname/cli/config.hpp"

#include <cctype>
#include <fstream>

#include "noname/error.hpp"

namespace noname::cli {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::parse, message, "parse"); }

exact::Rational rational_from(const nlohmann::json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return exact::Rational(j.get<long>());
    if (j.is_string()) return exact::Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": expected an integer or a \"p/q\" string");
}

std::vector<exact::Rational> rationals_from(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of coefficients");
  std::vector<exact::Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(rational_from(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
}

ProblemConfig load_config(const std::string& path) { return parse_config(load_json(path)); }

ProblemConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) fail("config must be a JSON object");
  ProblemConfig c;
  const auto base = get_or<std::string>(j, "base", "rational");
  if (base == "rational") {
    c.base = exact::BaseField::rationals();
  } else if (base == "prime") {
    const auto p = get_or<std::uint64_t>(j, "p", 0);
    if (!exact::is_prime(p)) fail("config 'p' must be a prime");
    c.base = exact::BaseField::prime(p);
  } else {
    fail("config 'base' must be \"rational\" or \"prime\"");
  }
  if (!j.contains("modulus")) fail("config lacks 'modulus'");
  c.modulus = rationals_from(j.at("modulus"), "modulus");
  if (c.modulus.size() < 2) fail("modulus must have degree >= 1");
  const std::size_t d = c.modulus.size() - 1;
  c.generator_name = get_or<std::string>(j, "generator_name", "t");
  if (c.generator_name.empty()) fail("generator_name must be nonempty");
  const auto basis = get_or<std::string>(j, "render_basis", "power");
  if (basis == "power") {
    c.render_basis = forms::RenderBasis::power;
  } else if (basis == "shifted") {
    c.render_basis = forms::RenderBasis::shifted;
  } else {
    fail("render_basis must be \"power\" or \"shifted\"");
  }
  c.dimension = get_or<std::size_t>(j, "dimension", 0);
  if (j.contains("generators")) {
    const auto& gens = j.at("generators");
    if (!gens.is_array()) fail("'generators' must be an array");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::string where = "generators[" + std::to_string(k) + "]";
      const auto& g = gens[k];
      if (!g.is_object() || !g.contains("matrix") || !g.contains("automorphism_image")) {
        fail(where + " needs 'matrix' and 'automorphism_image'");
      }
      GeneratorSpec spec;
      try {
        spec.matrix = g.at("matrix").get<group::IntMatrix>();
      } catch (const nlohmann::json::exception&) {
        fail(where + ".matrix must be a matrix of integers");
      }
      const std::size_t n = spec.matrix.size();
      for (const auto& row : spec.matrix) {
        if (row.size() != n) fail(where + ".matrix is not square");
      }
      if (c.dimension == 0) c.dimension = n;
      if (n != c.dimension) fail(where + ".matrix has dimension " + std::to_string(n) + ", expected " +
                                 std::to_string(c.dimension));
      spec.automorphism_image = rationals_from(g.at("automorphism_image"), where + ".automorphism_image");
      if (spec.automorphism_image.size() != d) {
        fail(where + ".automorphism_image has length " + std::to_string(spec.automorphism_image.size()) +
             ", modulus degree is " + std::to_string(d));
      }
      c.generators.push_back(std::move(spec));
    }
  }
  if (c.dimension == 0) fail("config needs 'dimension' when there are no generators");
  if (j.contains("alpha") && !j.at("alpha").is_null()) {
    c.alpha = rationals_from(j.at("alpha"), "alpha");
    if (c.alpha->size() > d) fail("alpha has more coefficients than the field degree");
  }
  c.construction = core::parse_construction(get_or<std::string>(j, "construction", "auto"));
  c.seed = get_or<std::uint64_t>(j, "seed", 1);
  c.closure_cap = get_or<std::size_t>(j, "closure_cap", group::kDefaultClosureCap);
  c.max_tries = get_or<std::size_t>(j, "max_tries", 100000);
  c.trust_irreducible = get_or<bool>(j, "trust_irreducible", false);
  return c;
}

field::FieldElement element_from(const field::Field& field, const std::vector<exact::Rational>& coords) {
  std::vector<exact::Scalar> s;
  for (const auto& q : coords) s.push_back(exact::Scalar::from_rational(field->base(), q));
  return field::FieldElement(field, std::move(s));
}

namespace {

template <typename Fn>
auto staged(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}

}  // namespace

Problem build_problem(const ProblemConfig& config) {
  field::Field k = staged("field", [&] {
    std::vector<exact::Scalar> coeffs;
    for (const auto& q : config.modulus) coeffs.push_back(exact::Scalar::from_rational(config.base, q));
    return field::FieldDescriptor::create(exact::UniPoly(config.base, std::move(coeffs)),
                                          {config.trust_irreducible});
  });
  auto group = staged("group", [&] {
    std::vector<group::IntMatrix> mats;
    for (const auto& g : config.generators) mats.push_back(g.matrix);
    return group::close_group(mats, config.closure_cap, config.dimension);
  });
  std::vector<field::Automorphism> images;
  auto presentation = staged("galois", [&] {
    for (const auto& g : config.generators) images.emplace_back(element_from(k, g.automorphism_image));
    auto p = field::close_automorphisms(k, images, config.closure_cap);
    const auto report = field::verify_presentation(p);
    if (!report.ok) throw Error(ErrorKind::precondition, "Galois presentation rejected: " + report.failure);
    return p;
  });
  auto iso = staged("iso", [&] { return group::bind_iso(std::move(group), std::move(presentation), images); });
  return Problem{config, k, std::move(iso), {config.generator_name, config.render_basis}};
}

exact::UniPoly parse_poly(const exact::BaseField& base, const std::string& text, const std::string& symbol) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) fail("empty field element");
  exact::UniPoly result(base);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      fail("malformed element '" + text + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) fail("malformed element '" + text + "'");
    exact::Rational coeff(1);
    unsigned long power = 0;
    const auto sym = term.find(symbol);
    if (sym == std::string::npos) {
      coeff = exact::Rational::parse(term);
    } else {
      std::string head = term.substr(0, sym);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coeff = exact::Rational::parse(head);
      std::string tail = term.substr(sym + symbol.size());
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2) fail("malformed power in '" + text + "'");
        try {
          power = std::stoul(tail.substr(1));
        } catch (const std::exception&) {
          fail("malformed power in '" + text + "'");
        }
      }
    }
    if (negative) coeff = -coeff;
    result = result + exact::UniPoly::monomial(base, exact::Scalar::from_rational(base, coeff), power);
  }
  return result;
}

field::FieldElement parse_element(const field::Field& field, const std::string& text, const std::string& symbol) {
  return field::FieldElement::from_poly(field, parse_poly(field->base(), text, symbol));
}

}  // namespace noname::cli
