#include "noname/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "noname/cli/config.hpp"
#include "noname/cli/report.hpp"
#include "noname/core/moore.hpp"
#include "noname/field/irreducible.hpp"

namespace noname::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
    case ErrorKind::parse:
      return kInput;
    case ErrorKind::classification:
    case ErrorKind::finiteness_cap:
    case ErrorKind::iso:
    case ErrorKind::normality:
    case ErrorKind::search_failure:
    case ErrorKind::precondition:
      return kPrecondition;
    case ErrorKind::verification:
      return kVerification;
    case ErrorKind::arithmetic:
    case ErrorKind::singular_matrix:
    case ErrorKind::internal_inconsistency:
      return kInternal;
  }
  return kInternal;
}

std::string format_error(const Error& e) {
  std::string msg = e.what();
  for (auto& ch : msg) {
    if (ch == '\n') ch = ' ';
  }
  return "error[stage=" + (e.stage().empty() ? std::string("run") : e.stage()) + "] " +
         std::string(to_string(e.kind())) + ": " + msg;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << format_error(e) << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error[stage=run] internal-inconsistency: " << e.what() << "\n";
    return kInternal;
  }
}

[[noreturn]] void bad_report(const std::string& message) { throw Error(ErrorKind::parse, message, "report"); }

[[noreturn]] void check_failed(const std::string& check, const std::string& detail) {
  throw Error(ErrorKind::verification, check + " check failed: " + detail, check);
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad_report(where + " lacks '" + key + "'");
  return j.at(key);
}

forms::KMatrix matrix_from_json(const field::Field& k, const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size) bad_report(where + " must have " + std::to_string(size) + " rows");
  std::vector<std::vector<field::FieldElement>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != size) bad_report(where + " must be square of size " + std::to_string(size));
    std::vector<field::FieldElement> r;
    for (const auto& e : row) r.push_back(forms::element_from_json(k, e));
    rows.push_back(std::move(r));
  }
  return forms::KMatrix(k, std::move(rows));
}

std::vector<field::FieldElement> elements_from_json(const field::Field& k, const json& j, std::size_t size,
                                                    const std::string& where) {
  if (!j.is_array() || j.size() != size) bad_report(where + " must have " + std::to_string(size) + " entries");
  std::vector<field::FieldElement> out;
  for (const auto& e : j) out.push_back(forms::element_from_json(k, e));
  return out;
}

bool same_field_data(const Problem& p, const json& f) {
  const auto& mod = need(f, "modulus", "field");
  if (!mod.is_array() || mod.size() != p.field->degree() + 1) return false;
  for (std::size_t e = 0; e < mod.size(); ++e) {
    if (!mod[e].is_string() || mod[e].get<std::string>() != p.field->modulus().coefficient(e).to_string()) return false;
  }
  return true;
}

}  // namespace

int run_parametrize(const ParametrizeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.format != "text" && opts.format != "json") {
      throw Error(ErrorKind::usage, "--format must be text or json", "parse");
    }
    auto config = load_config(opts.config_path);
    if (opts.seed) config.seed = *opts.seed;
    if (opts.construction) config.construction = core::parse_construction(*opts.construction);

    Timings timings;
    auto t0 = Clock::now();
    Problem problem = build_problem(config);
    timings.group_ms = ms_since(t0);

    t0 = Clock::now();
    AlphaInfo alpha{field::FieldElement::zero(problem.field)};
    if (config.alpha && !opts.find_alpha) {
      alpha.value = element_from(problem.field, *config.alpha);
    } else {
      try {
        alpha.value = field::find_normal(problem.iso.presentation(), config.seed, config.max_tries);
      } catch (Error& e) {
        e.set_stage("normality");
        throw;
      }
      alpha.searched = true;
      alpha.seed = config.seed;
    }
    timings.field_ms = ms_since(t0);

    t0 = Clock::now();
    auto cert = core::certify(problem.iso, alpha.value, config.construction);
    std::optional<core::ProductInY> product;
    if (cert.construction == core::Construction::permutation) product = core::product_in_y(cert);
    timings.certificate_ms = ms_since(t0);

    Outcome outcome{alpha, std::move(cert), std::move(product)};
    std::optional<Timings> shown;
    if (opts.timings) shown = timings;
    const json report = make_report(problem, outcome, shown);
    if (opts.out_path) {
      std::ofstream file(*opts.out_path);
      if (!file) throw Error(ErrorKind::usage, "cannot write '" + *opts.out_path + "'", "output");
      file << report.dump(2) << "\n";
    }
    if (opts.format == "json") {
      out << report.dump(2) << "\n";
    } else {
      out << text_report(problem, outcome, shown, opts.color);
    }
    return static_cast<int>(kOk);
  });
}

int run_verify(const std::string& report_path, const std::string& config_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const json report = load_json(report_path);
    const auto config = load_config(config_path);
    if (!report.is_object() || !report.contains("schema") || report.at("schema") != kReportSchema) {
      bad_report("unsupported report schema (expected " + std::to_string(kReportSchema) + ")");
    }
    const json& fj = need(report, "field", "report");
    const json& gj = need(report, "group", "report");
    const json& cj = need(report, "certificate", "report");

    const std::size_t config_degree = config.modulus.size() - 1;
    const auto& degree = need(fj, "degree", "field");
    if (!degree.is_number_unsigned() || degree.get<std::size_t>() != config_degree) {
      bad_report("field degree mismatch: report has " + degree.dump() + ", config has " +
                 std::to_string(config_degree));
    }
    const auto& dim = need(gj, "dimension", "group");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() != config.dimension) {
      bad_report("dimension mismatch: report has " + dim.dump() + ", config has " + std::to_string(config.dimension));
    }

    Problem problem = build_problem(config);
    const auto& k = problem.field;
    const auto& iso = problem.iso;
    const std::size_t n = config.dimension;
    if (!same_field_data(problem, fj)) check_failed("field", "report modulus differs from the config modulus");
    const auto& order = need(gj, "order", "group");
    if (!order.is_number_unsigned() || order.get<std::size_t>() != iso.group().order()) {
      check_failed("group", "report group order differs from the closed group");
    }

    const auto construction_name = need(cj, "construction", "certificate");
    if (!construction_name.is_string()) bad_report("certificate.construction must be a string");
    const auto request = core::parse_construction(construction_name.get<std::string>());
    if (request == core::ConstructionRequest::automatic) bad_report("certificate.construction must be concrete");
    const bool is_signed = request == core::ConstructionRequest::signed_perm;

    const auto alpha = forms::element_from_json(k, need(need(report, "alpha", "report"), "coefficients", "alpha"));
    const auto m = matrix_from_json(k, need(cj, "matrix", "certificate"), n, "certificate.matrix");
    const auto inverse = matrix_from_json(k, need(cj, "inverse", "certificate"), n, "certificate.inverse");
    const auto det_reported = forms::element_from_json(k, need(cj, "determinant", "certificate"));
    const auto& ys_json = need(cj, "y_forms", "certificate");
    if (!ys_json.is_array() || ys_json.size() != n) bad_report("certificate.y_forms must have n entries");

    // Normality of the recorded alpha.
    if (!field::is_normal(alpha, iso.presentation())) check_failed("normality", "alpha is not a normal element");

    std::vector<forms::LinearForm> linear;
    std::vector<forms::AffineForm> affine;
    std::vector<forms::AffineForm> affine_star;
    if (is_signed) {
      const auto cs = elements_from_json(k, need(cj, "constants", "certificate"), n, "certificate.constants");
      const auto star = matrix_from_json(k, need(cj, "augmented", "certificate"), n + 1, "certificate.augmented");
      for (std::size_t i = 0; i < n; ++i) affine.push_back({cs[i], m.row(i)});
      affine_star = affine_forms_of(star);
      if (!core::check_invariance(iso, affine)) check_failed("invariance", "M with c does not give invariant forms");
      if (!core::check_invariance(iso, affine_star)) check_failed("invariance", "M* does not give invariant forms");
      bool head = star(0, 0).is_one();
      for (std::size_t j = 1; j <= n; ++j) head = head && star(0, j).is_zero();
      if (!head) check_failed("payload", "first row of M* is not (1, 0, ..., 0)");
    } else {
      linear = linear_forms_of(m);
      if (!core::check_invariance(iso, linear)) check_failed("invariance", "M does not give invariant forms");
    }

    const auto det = forms::det_exact(m);
    if (det.is_zero()) check_failed("determinant", "det M = 0");
    if (!(det == det_reported)) check_failed("determinant", "recorded determinant differs from det M");

    if (!(m * inverse == forms::KMatrix::identity(k, n)) || !(inverse * m == forms::KMatrix::identity(k, n))) {
      check_failed("roundtrip", "recorded inverse is not inverse to M");
    }
    const bool roundtrip = is_signed ? core::check_roundtrip(affine, inverse) : core::check_roundtrip(linear, inverse);
    if (!roundtrip) check_failed("roundtrip", "substitution does not return the y-forms");

    for (std::size_t i = 0; i < n; ++i) {
      const auto& yj = ys_json[i];
      const auto coeffs = elements_from_json(k, need(yj, "coefficients", "y_form"), n, "y_form.coefficients");
      bool same = coeffs == m.row(i);
      if (is_signed) {
        same = same && forms::element_from_json(k, need(yj, "constant", "y_form")) == affine[i].constant &&
               affine_star[i] == affine[i];
      }
      if (!same) check_failed("payload", "y" + std::to_string(i + 1) + " disagrees with the certificate matrix");
    }

    const auto rebuilt = core::certify(iso, alpha, request);
    if (!(rebuilt.matrix == m)) check_failed("construction", "forms rebuilt from alpha differ from the certificate");
    if (is_signed) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!(rebuilt.constants[i] == affine[i].constant)) {
          check_failed("construction", "constant c" + std::to_string(i + 1) + " differs from the rebuilt one");
        }
      }
    }

    if (report.contains("product_in_y")) {
      if (is_signed) bad_report("product_in_y present on a signed certificate");
      const auto product = core::product_in_y(rebuilt);
      if (!product.coefficients_in_base) check_failed("product", "a coefficient lies outside the base field");
      if (forms::to_json(product.poly) != need(report.at("product_in_y"), "polynomial", "product_in_y")) {
        check_failed("product", "recorded expansion differs from the recomputed one");
      }
    }

    out << "verified: " << core::to_string(rebuilt.construction) << " certificate, n = " << n << ", degree "
        << k->degree() << ", group order " << iso.group().order() << "\n";
    return static_cast<int>(kOk);
  });
}

exact::UniPoly default_moore_modulus(std::uint64_t p, std::uint64_t e) {
  const auto base = exact::BaseField::prime(p);
  std::vector<std::uint64_t> digits(e, 0);
  while (true) {
    std::vector<exact::Scalar> coeffs;
    for (auto d : digits) coeffs.push_back(exact::Scalar::from_int(base, static_cast<long>(d)));
    coeffs.push_back(exact::Scalar::one(base));
    exact::UniPoly f(base, std::move(coeffs));
    if (field::check_irreducible(f).verdict == field::IrreducibleVerdict::irreducible) return f;
    std::size_t pos = 0;
    while (pos < e && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == e) throw Error(ErrorKind::internal_inconsistency, "no irreducible polynomial found", "field");
  }
}

namespace {

struct MooreVerdict {
  bool independent;
  bool invertible;
};

MooreVerdict judge(const core::MooreInstance& inst) {
  return {field::independent_over_base(inst.tuple), !forms::det_exact(inst.matrix).is_zero()};
}

}  // namespace

int run_moore(const MooreOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!exact::is_prime(opts.p)) throw Error(ErrorKind::usage, "p = " + std::to_string(opts.p) + " is not prime", "parse");
    if (opts.e < 1) throw Error(ErrorKind::usage, "e must be at least 1", "parse");
    if (opts.tuple.has_value() == opts.random.has_value()) {
      throw Error(ErrorKind::usage, "give exactly one of --tuple and --random", "parse");
    }
    const auto base = exact::BaseField::prime(opts.p);
    exact::UniPoly modulus = default_moore_modulus(opts.p, opts.e);
    field::Field k = [&] {
      if (opts.modulus) {
        auto m = parse_poly(base, *opts.modulus);
        if (m.degree() != static_cast<long>(opts.e)) {
          throw Error(ErrorKind::usage, "--modulus must have degree e", "parse");
        }
        modulus = m;
      }
      try {
        return field::FieldDescriptor::create(modulus);
      } catch (Error& e) {
        e.set_stage("field");
        throw;
      }
    }();
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < opts.e; ++i) order *= opts.p;
    const std::string q = "F_" + std::to_string(order);
    out << "field " << q << " = F_" << opts.p << "[t]/(" << k->modulus().to_string() << ")\n";

    if (opts.tuple) {
      std::vector<field::FieldElement> tuple;
      std::stringstream ss(*opts.tuple);
      std::string item;
      while (std::getline(ss, item, ',')) tuple.push_back(parse_element(k, item));
      if (tuple.empty()) throw Error(ErrorKind::usage, "empty tuple", "parse");
      const auto inst = core::moore_matrix(k, tuple);
      const auto v = judge(inst);
      out << "Moore matrix (n = " << tuple.size() << ", q = " << opts.p << "):\n" << forms::render_matrix(inst.matrix);
      out << "det = " << forms::render_element(forms::det_exact(inst.matrix)) << "\n";
      out << "tuple: " << (v.independent ? "independent" : "dependent") << "\n";
      out << "matrix: " << (v.invertible ? "invertible" : "singular") << "\n";
      if (v.independent != v.invertible) {
        throw Error(ErrorKind::internal_inconsistency, "invertibility disagrees with independence", "moore");
      }
      return static_cast<int>(kOk);
    }

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> digit(0, opts.p - 1);
    const std::size_t n = opts.e;
    std::size_t invertible = 0, singular = 0, agree = 0;
    for (std::size_t draw = 0; draw < *opts.random; ++draw) {
      std::vector<field::FieldElement> tuple;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<exact::Scalar> coords;
        for (std::size_t c = 0; c < opts.e; ++c) coords.push_back(exact::Scalar::from_int(base, static_cast<long>(digit(rng))));
        tuple.emplace_back(k, std::move(coords));
      }
      const auto v = judge(core::moore_matrix(k, tuple));
      (v.invertible ? invertible : singular)++;
      if (v.invertible == v.independent) ++agree;
    }
    const std::size_t total = *opts.random;
    out << "draws " << total << " (n = " << n << ", seed " << opts.seed << ")\n";
    out << "invertible " << invertible << ", singular " << singular << "\n";
    out << "agreement " << agree << "/" << total << " ("
        << (total ? 100.0 * static_cast<double>(agree) / static_cast<double>(total) : 100.0) << "%)\n";
    if (agree != total) {
      throw Error(ErrorKind::internal_inconsistency, "invertibility disagrees with independence", "moore");
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace noname::cli
