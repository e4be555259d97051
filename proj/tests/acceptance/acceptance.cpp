// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance              run all criteria
//   acceptance --criterion N run only criterion N

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "noname/cli/commands.hpp"
#include "noname/cli/report.hpp"
#include "noname/core/moore.hpp"
#include "support/support.hpp"

using namespace testing;
using forms::AffineForm;
using forms::LinearForm;

namespace {

// Time limits in milliseconds (0 = none).
constexpr double kLimitC4Golden = 1000;
constexpr double kLimitC4Det = 1000;
constexpr double kLimitD8 = 5000;
constexpr double kLimitInvariance = 60000;
constexpr double kLimitMoore = 10000;

constexpr std::uint64_t kInvarianceSeeds = 100;
constexpr int kLemmaInstances = 500;
constexpr int kMooreDraws = 200;
constexpr int kNormalityElements = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

FieldElement fixture_alpha(const cli::Problem& p) { return cli::element_from(p.field, *p.config.alpha); }

std::vector<FieldElement> act_on(const field::Automorphism& s, const std::vector<FieldElement>& v) {
  std::vector<FieldElement> out;
  for (const auto& e : v) out.push_back(s(e));
  return out;
}

std::size_t element_index(const group::GroupFieldIso& iso, const group::IntMatrix& m) {
  return *iso.group().index_of(group::SignedPermElement::from_matrix(m));
}

// 1 ---------------------------------------------------------------------------

Outcome c4_golden() {
  cli::ParametrizeOptions opts;
  opts.config_path = fixture_path("c4_signed.json");
  opts.format = "json";
  std::ostringstream out, err;
  if (cli::run_parametrize(opts, out, err) != 0) return {false, "parametrize failed: " + err.str()};
  const auto report = nlohmann::json::parse(out.str());
  const auto k = load_fixture("c4_signed.json").field;
  const auto& aug = report["certificate"]["augmented"];
  auto r = [&](unsigned e) { return power(k, e); };
  const auto one = FieldElement::one(k), zero = FieldElement::zero(k);
  const std::vector<std::vector<FieldElement>> expected{
      {one, zero, zero, zero},
      {r(3) + r(4), r(1) - r(4), r(2) - r(3), zero},
      {r(2) + r(4), r(3) - r(2), r(1) - r(4), zero},
      {r(2) + r(3), zero, zero, r(1) - r(2) - r(3) + r(4)}};
  if (aug.size() != 4) return {false, "M* has " + std::to_string(aug.size()) + " rows"};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (!(forms::element_from_json(k, aug[i][j]) == expected[i][j])) {
        return {false, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differs"};
      }
    }
  }
  return {true, "16/16 entries of M* equal"};
}

// 2 ---------------------------------------------------------------------------

Outcome c4_det() {
  const auto p = load_fixture("c4_signed.json");
  const auto cert = core::build_signed(p.iso, fixture_alpha(p));
  auto r = [&](unsigned e) { return power(p.field, e); };
  const auto expected = FieldElement::from_int(p.field, -5) * (r(1) - r(2) - r(3) + r(4));
  const auto elim = forms::det_exact(cert.matrix);
  const auto leib = leibniz_det(cert.matrix);
  const auto elim_star = forms::det_exact(*cert.augmented);
  const auto leib_star = leibniz_det(*cert.augmented);
  const bool ok = elim == expected && leib == expected && elim_star == expected && leib_star == expected &&
                  cert.determinant == expected;
  return {ok, "elimination and Leibniz on M and M*: " + forms::render_element(elim, p.render)};
}

// 3 ---------------------------------------------------------------------------

Outcome d8_golden() {
  const auto p = load_fixture("d8.json");
  const auto alpha = fixture_alpha(p);
  const auto cert = core::build_permutation(p.iso, alpha);
  const auto& m = cert.matrix;
  const auto r = p.iso.sigma(element_index(p.iso, p.config.generators[0].matrix));
  const auto s = p.iso.sigma(element_index(p.iso, p.config.generators[1].matrix));
  auto col = [&](std::size_t j) { return m.column(j - 1); };  // 1-based

  bool r_shift = true;
  for (std::size_t j = 1; j <= 4; ++j) r_shift = r_shift && act_on(r, col(j)) == col(j % 4 + 1);
  const bool s_fix = act_on(s, col(1)) == col(1);
  bool s_literal = true;
  for (std::size_t j = 1; j <= 4; ++j) s_literal = s_literal && act_on(s, col(j)) == col(5 - j);
  bool s_corrected = true;
  for (std::size_t j = 1; j <= 4; ++j) s_corrected = s_corrected && act_on(s, col(j)) == col((6 - j) % 4 == 0 ? 4 : (6 - j) % 4);
  const bool det_ok = !forms::det_exact(m).is_zero();

  // Symbolic layout: row i, column j is r^(j-i) applied to (1+s)(alpha) for
  // odd i and to (1+r^2 s)(alpha) for even i.
  const auto& id = p.iso.sigma(0);
  auto rpow = [&](unsigned e) {
    auto a = id;
    for (unsigned k = 0; k < e % 4; ++k) a = field::compose(r, a);
    return a;
  };
  const auto a_odd = alpha + s(alpha);
  const auto a_even = alpha + field::compose(rpow(2), s)(alpha);
  bool layout = true;
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      layout = layout && m(i, j) == rpow(j + 4 - i)(i % 2 == 0 ? a_odd : a_even);
    }
  }

  std::ostringstream d;
  d << "r(M_j)=M_{j+1}: " << (r_shift ? "yes" : "no") << "; s(M_1)=M_1: " << (s_fix ? "yes" : "no")
    << "; s(M_j)=M_{5-j} for all j: " << (s_literal ? "yes" : "no")
    << "; s(M_j)=M_{2-j mod 4}: " << (s_corrected ? "yes" : "no") << "; det!=0: " << (det_ok ? "yes" : "no")
    << "; entries match printed M: " << (layout ? "yes" : "no");
  return {r_shift && s_fix && s_literal && det_ok, d.str()};
}

// 4 and 5 -------------------------------------------------------------------

struct Built {
  std::string fixture;
  cli::Problem problem;
  core::RationalityCertificate cert;
};

std::vector<Built>& certificates() {
  static std::vector<Built> all = [] {
    std::vector<Built> out;
    for (const auto& name : fixture_names()) {
      const auto p = load_fixture(name);
      for (std::uint64_t seed = 1; seed <= kInvarianceSeeds; ++seed) {
        const auto alpha = field::find_normal(p.iso.presentation(), seed);
        out.push_back({name, p, core::certify(p.iso, alpha)});
      }
    }
    return out;
  }();
  return all;
}

Outcome invariance_suite() {
  std::size_t checked = 0;
  for (const auto& b : certificates()) {
    const auto& iso = b.problem.iso;
    for (std::size_t g = 0; g < iso.group().order(); ++g) {
      if (b.cert.construction == core::Construction::permutation) {
        for (const auto& y : b.cert.linear_forms) {
          if (!(forms::act_linear(iso, g, y) == y)) return {false, b.fixture + ": a y-form moved"};
          ++checked;
        }
      } else {
        for (const auto& y : b.cert.affine_forms) {
          if (!(forms::act_affine(iso, g, y) == y)) return {false, b.fixture + ": a y-form moved"};
          ++checked;
        }
      }
    }
  }
  return {true, std::to_string(certificates().size()) + " certificates, " + std::to_string(checked) +
                    " (g, y_i) pairs fixed"};
}

Outcome roundtrip_suite() {
  std::size_t count = 0;
  for (const auto& b : certificates()) {
    const auto& cert = b.cert;
    const auto& k = b.problem.field;
    const std::size_t n = cert.matrix.rows();
    const auto inv = forms::invert_exact(cert.matrix);
    for (std::size_t i = 0; i < n; ++i) {
      // sum_k inv(i,k) * (y_k - c_k) written back in x (resp. z).
      std::vector<FieldElement> coeffs(n, FieldElement::zero(k));
      auto constant = FieldElement::zero(k);
      for (std::size_t kk = 0; kk < n; ++kk) {
        if (cert.construction == core::Construction::permutation) {
          for (std::size_t j = 0; j < n; ++j) coeffs[j] += inv(i, kk) * cert.linear_forms[kk].coefficients[j];
        } else {
          const auto& y = cert.affine_forms[kk];
          constant += inv(i, kk) * (y.constant - cert.constants[kk]);
          for (std::size_t j = 0; j < n; ++j) coeffs[j] += inv(i, kk) * y.coefficients[j];
        }
      }
      bool unit = constant.is_zero();
      for (std::size_t j = 0; j < n; ++j) unit = unit && (j == i ? coeffs[j].is_one() : coeffs[j].is_zero());
      if (!unit) return {false, b.fixture + ": recovered variable " + std::to_string(i + 1) + " is wrong"};
    }
    ++count;
  }
  return {true, std::to_string(count) + " certificates return the standard basis"};
}

// 6 ---------------------------------------------------------------------------

struct BlockSite {
  cli::Problem problem;
  std::vector<std::size_t> block;
};

std::vector<BlockSite> block_sites() {
  std::vector<BlockSite> out;
  for (const auto& name : fixture_names()) {
    const auto p = load_fixture(name);
    for (const auto& b : group::orbits(p.iso.group()).blocks) out.push_back({p, b});
  }
  return out;
}

/// Column-permuted matrix supported on `block`: column i0 is c, column j is
/// +-g(c) for g in G^{+-}_{i0,j}. With `dependent`, the last entry of c is an
/// F-combination of the others first.
std::optional<KMatrix> lemma_instance(const BlockSite& site, std::mt19937_64& rng, bool dependent) {
  const auto& iso = site.problem.iso;
  const auto& k = site.problem.field;
  const auto& g = iso.group();
  const std::size_t n = g.dimension();
  const std::size_t i0 = site.block.front();
  const auto table = group::coset_table(g);

  std::vector<FieldElement> c(n, FieldElement::zero(k));
  for (auto row : site.block) {
    const auto v = random_element(k, rng, 4);
    for (auto h : table.plus(i0, i0)) c[row] += iso.sigma(h)(v);
    for (auto h : table.minus(i0, i0)) c[row] -= iso.sigma(h)(v);
  }
  if (dependent) {
    auto combo = FieldElement::zero(k);
    for (std::size_t t = 0; t + 1 < site.block.size(); ++t) {
      combo += c[site.block[t]] * FieldElement::from_scalar(k, random_scalar(k->base(), rng, 3));
    }
    c[site.block.back()] = combo;
  } else {
    std::vector<std::vector<Scalar>> rows;
    for (auto row : site.block) rows.push_back(field::coords_over_base(c[row]));
    if (oracle_rank(rows) != site.block.size()) return std::nullopt;
  }
  KMatrix m(k, n, n);
  for (auto j : site.block) {
    const bool plus = !table.plus(i0, j).empty();
    const auto gj = plus ? table.plus(i0, j).front() : table.minus(i0, j).front();
    for (auto row : site.block) m(row, j) = plus ? iso.sigma(gj)(c[row]) : -iso.sigma(gj)(c[row]);
  }
  return m;
}

KMatrix principal_block(const KMatrix& m, const std::vector<std::size_t>& block) {
  KMatrix out(m.field(), block.size(), block.size());
  for (std::size_t a = 0; a < block.size(); ++a) {
    for (std::size_t b = 0; b < block.size(); ++b) out(a, b) = m(block[a], block[b]);
  }
  return out;
}

Outcome lemma_property() {
  const auto sites = block_sites();
  std::mt19937_64 rng(20240601);
  int good = 0, attempts = 0;
  while (good < kLemmaInstances) {
    if (++attempts > 50 * kLemmaInstances) return {false, "could not build independent instances"};
    const auto& site = sites[static_cast<std::size_t>(attempts) % sites.size()];
    const auto m = lemma_instance(site, rng, false);
    if (!m) continue;
    const auto rep = core::check_signdet_block(*m, site.problem.iso, site.block);
    if (!rep.columns_permuted || !rep.first_column_independent || !rep.lemma_applies) {
      return {false, "checker rejected a hypothesis-satisfying instance: " + rep.failure};
    }
    if (leibniz_det(principal_block(*m, site.block)).is_zero() || !rep.det_nonzero) {
      return {false, "hypotheses hold but det = 0"};
    }
    ++good;
  }
  int singular = 0;
  for (int n = 0; n < kLemmaInstances; ++n) {
    const auto& site = sites[static_cast<std::size_t>(n) % sites.size()];
    const auto m = lemma_instance(site, rng, true);
    const auto rep = core::check_signdet_block(*m, site.problem.iso, site.block);
    if (rep.lemma_applies || rep.lemma_violated) return {false, "false Lemma assertion on a dependent instance"};
    if (leibniz_det(principal_block(*m, site.block)).is_zero()) ++singular;
  }
  return {singular > 0, std::to_string(good) + " independent instances all invertible; " + std::to_string(singular) +
                            "/" + std::to_string(kLemmaInstances) + " dependent instances singular, no false assertion"};
}

// 7 ---------------------------------------------------------------------------

Outcome moore_crosscheck() {
  struct Case {
    std::uint64_t p;
    std::vector<long> modulus;
    const char* name;
  };
  const std::vector<Case> cases{{2, {1, 1, 1}, "F_4"}, {2, {1, 1, 0, 1}, "F_8"}, {3, {1, 0, 1}, "F_9"}};
  std::ostringstream d;
  std::mt19937_64 rng(7);
  bool all = true;
  for (const auto& c : cases) {
    const auto k = make_field(BaseField::prime(c.p), c.modulus);
    const std::size_t e = k->degree();
    std::vector<FieldElement> elements;
    std::size_t total = 1;
    for (std::size_t i = 0; i < e; ++i) total *= c.p;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Scalar> coords;
      for (std::size_t i = 0, x = code; i < e; ++i, x /= c.p) coords.push_back(Scalar::from_int(k->base(), static_cast<long>(x % c.p)));
      elements.emplace_back(k, coords);
    }
    std::size_t checked = 0, agree = 0, invertible = 0;
    auto judge = [&](const std::vector<FieldElement>& tuple) {
      const auto inst = core::moore_matrix(k, tuple);
      const bool inv = !forms::det_exact(inst.matrix).is_zero();
      std::vector<std::vector<Scalar>> rows;
      for (const auto& a : tuple) rows.push_back(field::coords_over_base(a));
      const bool indep = oracle_rank(rows) == tuple.size();
      ++checked;
      invertible += inv;
      agree += inv == indep;
    };
    // Exhaustive over all tuples of every length n <= e.
    for (std::size_t n = 1; n <= e; ++n) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < n; ++i) count *= total;
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<FieldElement> tuple;
        for (std::size_t i = 0, x = code; i < n; ++i, x /= total) tuple.push_back(elements[x % total]);
        judge(tuple);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, total - 1);
    for (int draw = 0; draw < kMooreDraws; ++draw) {
      std::vector<FieldElement> tuple;
      for (std::size_t i = 0; i < e; ++i) tuple.push_back(elements[pick(rng)]);
      judge(tuple);
    }
    all = all && agree == checked;
    d << c.name << " " << agree << "/" << checked << " (" << invertible << " invertible)  ";
  }
  return {all, d.str()};
}

// 8 ---------------------------------------------------------------------------

Outcome coordinate_ring() {
  std::ostringstream d;
  bool ok = true;
  std::mt19937_64 rng(8);
  for (const auto& name : {"c2_swap.json", "d8.json"}) {
    const auto p = load_fixture(name);
    const auto cert = core::build_permutation(p.iso, fixture_alpha(p));
    const auto prod = core::product_in_y(cert);
    const std::size_t n = p.iso.group().dimension();
    bool homogeneous = true, in_base = true;
    for (const auto& [exps, coeff] : prod.poly.terms()) {
      unsigned deg = 0;
      for (auto e : exps) deg += e;
      homogeneous = homogeneous && deg == n;
      in_base = in_base && coeff.in_base();
    }
    // Evaluate both sides at random base-field points y.
    bool agrees = true;
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<FieldElement> y;
      for (std::size_t i = 0; i < n; ++i) y.push_back(FieldElement::from_scalar(p.field, random_scalar(p.field->base(), rng)));
      auto lhs = FieldElement::one(p.field);
      for (std::size_t i = 0; i < n; ++i) {
        auto xi = FieldElement::zero(p.field);
        for (std::size_t k = 0; k < n; ++k) xi += cert.inverse(i, k) * y[k];
        lhs *= xi;
      }
      auto rhs = FieldElement::zero(p.field);
      for (const auto& [exps, coeff] : prod.poly.terms()) {
        auto term = coeff;
        for (std::size_t i = 0; i < n; ++i) term *= y[i].pow(mpz_class(exps[i]));
        rhs += term;
      }
      agrees = agrees && lhs == rhs;
    }
    ok = ok && homogeneous && in_base && agrees && prod.coefficients_in_base;
    d << name << ": " << prod.poly.terms().size() << " terms, degree " << n << (homogeneous ? " homogeneous" : " NOT homogeneous")
      << (in_base ? ", base coefficients" : ", non-base coefficient") << (agrees ? ", evaluation agrees  " : ", evaluation differs  ");
  }
  return {ok, d.str()};
}

// 9 ---------------------------------------------------------------------------

Outcome normality_oracle() {
  std::vector<cli::Problem> problems;
  for (const auto& name : fixture_names()) problems.push_back(load_fixture(name));
  std::mt19937_64 rng(9);
  int normal = 0, other = 0;
  for (int n = 0; n < kNormalityElements; ++n) {
    const auto& p = problems[static_cast<std::size_t>(n) % problems.size()];
    const auto& pres = p.iso.presentation();
    auto a = random_element(p.field, rng, 1);
    if (n % 3 == 1) {
      // Partial trace over a random element: often lands in a subfield.
      std::uniform_int_distribution<std::size_t> pick(0, pres.order() - 1);
      a += pres.automorphisms[pick(rng)](a);
    }
    const bool lib = field::is_normal(a, pres);
    if (lib != oracle_normal(a, pres)) return {false, "disagreement on " + a.to_string()};
    (lib ? normal : other)++;
  }
  return {true, std::to_string(kNormalityElements) + " elements agree (" + std::to_string(normal) + " normal, " +
                    std::to_string(other) + " not)"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, "C4 golden M*", kLimitC4Golden, c4_golden},
      {2, "C4 determinant", kLimitC4Det, c4_det},
      {3, "D8 golden columns", kLimitD8, d8_golden},
      {4, "invariance suite", kLimitInvariance, invariance_suite},
      {5, "round-trip suite", 0, roundtrip_suite},
      {6, "signdet lemma property", 0, lemma_property},
      {7, "Moore cross-check", kLimitMoore, moore_crosscheck},
      {8, "coordinate ring", 0, coordinate_ring},
      {9, "normality oracle", 0, normality_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_ms > 0 && ms > c.limit_ms) {
      o.pass = false;
      o.detail += " [over time limit " + std::to_string(static_cast<int>(c.limit_ms)) + " ms]";
    }
    failures += !o.pass;
    std::cout << "criterion " << c.id << " [PRIMARY] " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
              << static_cast<long>(ms) << " ms)  " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
