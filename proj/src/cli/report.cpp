#include "noname/cli/report.hpp"

#include <sstream>

namespace noname::cli {

using nlohmann::json;

namespace {

json matrix_json(const group::IntMatrix& m) { return json(m); }

std::string scalar_text(const exact::Scalar& s) { return s.to_string(); }

json field_json(const Problem& p) {
  const auto& k = *p.field;
  json j;
  j["base"] = k.base().is_prime_field() ? "prime" : "rational";
  if (k.base().is_prime_field()) j["p"] = k.base().characteristic();
  json mod = json::array();
  for (long e = 0; e <= k.modulus().degree(); ++e) mod.push_back(scalar_text(k.modulus().coefficient(e)));
  j["modulus"] = mod;
  j["degree"] = k.degree();
  j["generator_name"] = p.render.symbol;
  j["irreducibility"] = k.irreducibility() == field::Irreducibility::verified ? "verified" : "asserted";
  j["irreducibility_reason"] = k.irreducibility_reason();
  return j;
}

json group_json(const Problem& p) {
  const auto& g = p.iso.group();
  const auto part = group::orbits(g);
  json j;
  j["dimension"] = g.dimension();
  j["order"] = g.order();
  j["classification"] = group::to_string(group::classify(g));
  json gens = json::array();
  for (const auto& e : g.generators()) gens.push_back(matrix_json(e.to_matrix()));
  j["generators"] = gens;
  json blocks = json::array();
  for (const auto& b : part.blocks) {
    json block = json::array();
    for (auto i : b) block.push_back(i + 1);
    blocks.push_back(block);
  }
  j["orbits"] = blocks;
  j["transitive"] = part.transitive();
  json stab = json::array();
  json signed_stab = json::array();
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    stab.push_back(group::stabilizer(g, i).size());
    signed_stab.push_back(group::signed_stabilizer(g, i).size());
  }
  j["stabilizer_sizes"] = stab;
  j["signed_stabilizer_sizes"] = signed_stab;
  return j;
}

json checks_json(const core::RationalityCertificate& c) {
  json j;
  j["normality"] = true;
  j["determinant_nonzero"] = !c.determinant.is_zero();
  j["invariance"] = c.invariance_checked;
  j["roundtrip"] = c.roundtrip_checked;
  j["block_diagonal"] = c.block_diagonal;
  return j;
}

json block_json(const core::SigndetReport& r) {
  json j;
  json idx = json::array();
  for (auto i : r.indices) idx.push_back(i + 1);
  j["indices"] = idx;
  j["columns_permuted"] = r.columns_permuted;
  j["first_column_independent"] = r.first_column_independent;
  j["lemma_applies"] = r.lemma_applies;
  j["determinant_nonzero"] = r.det_nonzero;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

const char* bold(bool color) { return color ? "\x1b[1m" : ""; }
const char* green(bool color) { return color ? "\x1b[32m" : ""; }
const char* reset(bool color) { return color ? "\x1b[0m" : ""; }

}  // namespace

std::vector<forms::LinearForm> linear_forms_of(const forms::KMatrix& m) {
  std::vector<forms::LinearForm> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back({m.row(i)});
  return out;
}

std::vector<forms::AffineForm> affine_forms_of(const forms::KMatrix& augmented) {
  std::vector<forms::AffineForm> out;
  for (std::size_t i = 1; i < augmented.rows(); ++i) {
    auto row = augmented.row(i);
    forms::AffineForm f{row.front(), {row.begin() + 1, row.end()}};
    out.push_back(std::move(f));
  }
  return out;
}

json make_report(const Problem& problem, const Outcome& outcome, const std::optional<Timings>& timings) {
  const auto& cert = outcome.certificate;
  const auto& opts = problem.render;
  json r;
  r["schema"] = kReportSchema;
  r["field"] = field_json(problem);
  r["group"] = group_json(problem);

  json a;
  a["coefficients"] = forms::to_json(outcome.alpha.value);
  a["text"] = forms::render_element(outcome.alpha.value, opts);
  a["normal"] = true;
  a["searched"] = outcome.alpha.searched;
  if (outcome.alpha.searched) a["seed"] = outcome.alpha.seed;
  r["alpha"] = a;

  json c;
  c["construction"] = core::to_string(cert.construction);
  json ys = json::array();
  if (cert.construction == core::Construction::permutation) {
    c["variables"] = "x";
    for (const auto& f : cert.linear_forms) {
      json y = forms::to_json(f);
      y["text"] = forms::render_linear(f, opts);
      ys.push_back(y);
    }
  } else {
    c["variables"] = "z";
    for (const auto& f : cert.affine_forms) {
      json y = forms::to_json(f);
      y["text"] = forms::render_affine(f, opts);
      y["text_in_x"] = forms::render_affine_in_x(f, opts);
      ys.push_back(y);
    }
    c["augmented"] = forms::to_json(*cert.augmented);
    json cs = json::array();
    for (const auto& e : cert.constants) cs.push_back(forms::to_json(e));
    c["constants"] = cs;
  }
  c["y_forms"] = ys;
  c["matrix"] = forms::to_json(cert.matrix);
  c["inverse"] = forms::to_json(cert.inverse);
  c["determinant"] = forms::to_json(cert.determinant);
  c["determinant_text"] = forms::render_element(cert.determinant, opts);
  c["checks"] = checks_json(cert);
  json blocks = json::array();
  for (const auto& b : cert.block_reports) blocks.push_back(block_json(b));
  c["orbit_blocks"] = blocks;
  r["certificate"] = c;

  if (outcome.product) {
    json p;
    p["polynomial"] = forms::to_json(outcome.product->poly);
    p["text"] = forms::render_poly(outcome.product->poly, opts);
    p["homogeneous_degree"] = problem.iso.group().dimension();
    p["homogeneous"] = outcome.product->poly.is_homogeneous(static_cast<unsigned>(problem.iso.group().dimension()));
    p["coefficients_in_base"] = outcome.product->coefficients_in_base;
    r["product_in_y"] = p;
  }
  if (timings) {
    json t;
    t["field_ms"] = timings->field_ms;
    t["group_ms"] = timings->group_ms;
    t["certificate_ms"] = timings->certificate_ms;
    r["timings"] = t;
  }
  return r;
}

std::string text_report(const Problem& problem, const Outcome& outcome, const std::optional<Timings>& timings,
                        bool color) {
  const auto& cert = outcome.certificate;
  const auto& opts = problem.render;
  const auto& k = *problem.field;
  const auto& g = problem.iso.group();
  const auto part = group::orbits(g);
  std::ostringstream out;
  // Labels pad to a 14-column gutter; values start right after.
  auto label = [&](const std::string& s) {
    out << bold(color) << s << reset(color) << std::string(s.size() < 14 ? 14 - s.size() : 1, ' ');
  };

  label("field");
  out << (k.base().is_prime_field() ? "F_" + std::to_string(k.base().characteristic()) : std::string("Q"))
      << "[" << opts.symbol << "]/(" << k.modulus().to_string(opts.symbol) << "), degree " << k.degree() << ", "
      << (k.irreducibility() == field::Irreducibility::verified ? "irreducible" : "irreducible (asserted)") << "\n";
  label("group");
  out << "order " << g.order() << ", " << group::to_string(group::classify(g)) << ", n = " << g.dimension()
      << (part.transitive() ? ", transitive" : ", intransitive") << "\n";
  label("orbits");
  for (std::size_t n = 0; n < part.blocks.size(); ++n) {
    const auto& b = part.blocks[n];
    out << (n ? " {" : "{");
    for (std::size_t t = 0; t < b.size(); ++t) out << (t ? "," : "") << b[t] + 1;
    out << "}";
  }
  out << "\n";
  label("stabilizers");
  for (std::size_t i = 0; i < g.dimension(); ++i) out << (i ? " " : "") << group::stabilizer(g, i).size();
  out << "\n";
  label("alpha");
  out << forms::render_element(outcome.alpha.value, opts) << " ("
      << (outcome.alpha.searched ? "searched, seed " + std::to_string(outcome.alpha.seed) : std::string("given"))
      << ", normal)\n";
  label("construction");
  out << core::to_string(cert.construction) << "\n\n";

  if (cert.construction == core::Construction::permutation) {
    for (std::size_t i = 0; i < cert.linear_forms.size(); ++i) {
      out << "y" << i + 1 << " = " << forms::render_linear(cert.linear_forms[i], opts) << "\n";
    }
    out << "\nM =\n" << forms::render_matrix(cert.matrix, opts);
  } else {
    for (std::size_t i = 0; i < cert.affine_forms.size(); ++i) {
      out << "y" << i + 1 << " = " << forms::render_affine(cert.affine_forms[i], opts) << "\n";
    }
    out << "\nM* =\n" << forms::render_matrix(*cert.augmented, opts);
  }
  out << "\ndet M = " << forms::render_element(cert.determinant, opts) << "\n\n";
  label("checks");
  bool first = true;
  auto mark = [&](const char* name, bool ok) {
    out << (first ? "" : "  ") << name << (ok ? std::string(green(color)) + " ok" + reset(color) : std::string(" FAILED"));
    first = false;
  };
  mark("normality", true);
  mark("determinant", !cert.determinant.is_zero());
  mark("invariance", cert.invariance_checked);
  mark("roundtrip", cert.roundtrip_checked);
  out << "\n";
  for (const auto& b : cert.block_reports) {
    out << "  block {";
    for (std::size_t t = 0; t < b.indices.size(); ++t) out << (t ? "," : "") << b.indices[t] + 1;
    out << "}: lemma " << (b.lemma_applies ? "applies" : "does not apply")
        << ", det " << (b.det_nonzero ? "nonzero" : "zero") << "\n";
  }
  if (outcome.product) {
    out << "\nx1";
    for (std::size_t i = 1; i < g.dimension(); ++i) out << "·x" << i + 1;
    out << " = " << forms::render_poly(outcome.product->poly, opts) << "\n";
    out << "coefficients in base field: " << (outcome.product->coefficients_in_base ? "yes" : "no") << "\n";
  }
  if (timings) {
    out << "\ntimings (ms): field " << timings->field_ms << ", group " << timings->group_ms << ", certificate "
        << timings->certificate_ms << "\n";
  }
  return out.str();
}

}  // namespace noname::cli
