#include <doctest.h>

#include "noname/error.hpp"
#include "support/support.hpp"

using namespace testing;
using forms::AffineForm;
using forms::LinearForm;
using forms::MultiPoly;

namespace {

FieldElement s2_elem(const Field& k, long a, long b) {
  return FieldElement(k, {Scalar(Rational(a)), Scalar(Rational(b))});
}

KMatrix random_matrix(const Field& k, std::size_t n, std::mt19937_64& rng) {
  KMatrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(k, rng, 3);
  }
  return m;
}

LinearForm random_linear(const Field& k, std::size_t n, std::mt19937_64& rng) {
  LinearForm f = LinearForm::zero(k, n);
  for (auto& c : f.coefficients) c = random_element(k, rng, 3);
  return f;
}

AffineForm random_affine(const Field& k, std::size_t n, std::mt19937_64& rng) {
  AffineForm f = AffineForm::zero(k, n);
  f.constant = random_element(k, rng, 3);
  for (auto& c : f.coefficients) c = random_element(k, rng, 3);
  return f;
}

}  // namespace

TEST_CASE("actions on forms: examples") {
  const auto swap = load_fixture("c2_swap.json");
  const auto k = swap.field;
  const LinearForm f{{s2_elem(k, 1, 1), s2_elem(k, 1, -1)}};
  CHECK(forms::act_linear(swap.iso, 0, f) == f);
  CHECK(forms::act_linear(swap.iso, 1, f) == f);
  const LinearForm g{{s2_elem(k, 1, 1), s2_elem(k, 0, 0)}};
  CHECK(forms::act_linear(swap.iso, 1, g) == LinearForm{{s2_elem(k, 0, 0), s2_elem(k, 1, -1)}});

  const auto sign = load_fixture("c2_sign.json");
  const AffineForm y{s2_elem(sign.field, 1, -1), {s2_elem(sign.field, 0, 2)}};
  CHECK(forms::act_affine(sign.iso, 0, y) == y);
  CHECK(forms::act_affine(sign.iso, 1, y) == y);

  const auto c4 = load_fixture("c4_signed.json");
  CHECK_THROWS_AS(forms::act_linear(c4.iso, 1, LinearForm::unit(c4.field, 3, 0)), noname::Error);
}

TEST_CASE("the dihedral r carries y1 to y2") {
  const auto p = load_fixture("d8.json");
  const auto alpha = cli::element_from(p.field, *p.config.alpha);
  const auto cert = core::build_permutation(p.iso, alpha);
  const auto r = *p.iso.group().index_of(group::SignedPermElement::from_matrix(p.config.generators[0].matrix));
  // r maps column j of M to column j+1; the forms themselves are fixed.
  for (std::size_t j = 0; j < 4; ++j) {
    std::vector<FieldElement> moved;
    for (auto& e : cert.matrix.column(j)) moved.push_back(p.iso.sigma(r)(e));
    CHECK(moved == cert.matrix.column((j + 1) % 4));
  }
  CHECK(forms::act_linear(p.iso, r, cert.linear_forms[0]) == cert.linear_forms[0]);
}

TEST_CASE("actions are group actions") {
  std::mt19937_64 rng(12);
  for (const auto& name : fixture_names()) {
    const auto p = load_fixture(name);
    const auto& g = p.iso.group();
    const std::size_t n = g.dimension();
    const bool pure = group::classify(g) == group::Classification::pure_permutation;
    for (int rep = 0; rep < 3; ++rep) {
      const auto lf = random_linear(p.field, n, rng);
      const auto af = random_affine(p.field, n, rng);
      for (std::size_t a = 0; a < g.order(); ++a) {
        for (std::size_t b = 0; b < g.order(); ++b) {
          CHECK(forms::act_affine(p.iso, g.mul(a, b), af) ==
                forms::act_affine(p.iso, a, forms::act_affine(p.iso, b, af)));
          if (pure) {
            CHECK(forms::act_linear(p.iso, g.mul(a, b), lf) ==
                  forms::act_linear(p.iso, a, forms::act_linear(p.iso, b, lf)));
          }
        }
      }
      CHECK(forms::act_affine(p.iso, 0, af) == af);
    }
  }
}

TEST_CASE("determinant examples") {
  const auto c4 = load_fixture("c4_signed.json");
  const auto& k = c4.field;
  auto r = [&](unsigned e) { return power(k, e); };
  const auto one = FieldElement::one(k), zero = FieldElement::zero(k);
  const KMatrix mstar(k, {{one, zero, zero, zero},
                          {r(3) + r(4), r(1) - r(4), r(2) - r(3), zero},
                          {r(2) + r(4), r(3) - r(2), r(1) - r(4), zero},
                          {r(2) + r(3), zero, zero, r(1) - r(2) - r(3) + r(4)}});
  const auto expected = FieldElement::from_int(k, -5) * (r(1) - r(2) - r(3) + r(4));
  CHECK(forms::det_exact(mstar) == expected);
  CHECK(leibniz_det(mstar) == expected);
  CHECK(forms::det_exact(KMatrix::identity(k, 3)).is_one());

  const auto f4 = make_field(BaseField::prime(2), {1, 1, 1});
  const auto t = FieldElement::generator(f4);
  const KMatrix moore(f4, {{t, t * t}, {FieldElement::one(f4), FieldElement::one(f4)}});
  CHECK(forms::det_exact(moore).is_one());
}

TEST_CASE("determinant is multiplicative and matches the Leibniz oracle") {
  std::mt19937_64 rng(21);
  for (const auto& k : {cyclotomic5(), sqrt2(), make_field(BaseField::prime(3), {1, 0, 1})}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int rep = 0; rep < 4; ++rep) {
        const auto a = random_matrix(k, n, rng), b = random_matrix(k, n, rng);
        CHECK(forms::det_exact(a * b) == forms::det_exact(a) * forms::det_exact(b));
        CHECK(forms::det_exact(a) == leibniz_det(a));
      }
    }
  }
}

TEST_CASE("inversion") {
  const auto k = sqrt2();
  CHECK(forms::invert_exact(KMatrix::identity(k, 3)) == KMatrix::identity(k, 3));
  const KMatrix m(k, {{s2_elem(k, 1, 1), s2_elem(k, 1, -1)}, {s2_elem(k, 1, -1), s2_elem(k, 1, 1)}});
  CHECK(forms::det_exact(m) == s2_elem(k, 0, 4));
  const auto inv = forms::invert_exact(m);
  CHECK(m * inv == KMatrix::identity(k, 2));
  // Closed form: adj / det.
  const auto det = s2_elem(k, 0, 4);
  CHECK(inv(0, 0) == s2_elem(k, 1, 1) / det);
  CHECK(inv(0, 1) == -s2_elem(k, 1, -1) / det);
  const auto one = FieldElement::one(k);
  CHECK_THROWS_AS(forms::invert_exact(KMatrix(k, {{one, one}, {one, one}})), noname::Error);
  try {
    (void)forms::invert_exact(KMatrix(k, {{one, one}, {one, one}}));
  } catch (const noname::Error& e) {
    CHECK(e.kind() == noname::ErrorKind::singular_matrix);
  }
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = random_matrix(cyclotomic5(), 3, rng);
    if (forms::det_exact(a).is_zero()) continue;
    const auto ai = forms::invert_exact(a);
    CHECK(a * ai == KMatrix::identity(a.field(), 3));
    CHECK(ai * a == KMatrix::identity(a.field(), 3));
  }
}

TEST_CASE("substitution") {
  const auto k = cyclotomic5();
  const auto r = FieldElement::generator(k);
  const LinearForm f{{r, FieldElement::one(k)}};
  const std::vector<LinearForm> images{LinearForm::unit(k, 2, 1), LinearForm::unit(k, 2, 0)};
  CHECK(forms::substitute(f, images) == LinearForm{{FieldElement::one(k), r}});
  const AffineForm a{r, {r, FieldElement::zero(k)}};
  const std::vector<AffineForm> aff{AffineForm{FieldElement::one(k), {FieldElement::zero(k), r}},
                                    AffineForm::unit(k, 2, 0)};
  CHECK(forms::substitute(a, aff) == AffineForm{r + r, {FieldElement::zero(k), r * r}});
}

TEST_CASE("expanding products") {
  const auto k = sqrt2();
  const auto one = FieldElement::one(k), zero = FieldElement::zero(k);
  const auto c = s2_elem(k, 3, 1);
  auto p = forms::expand_product({LinearForm{{c}}});
  CHECK(p.terms().size() == 1);
  CHECK(p.terms().at({1}) == c);
  p = forms::expand_product({LinearForm{{one, one}}, LinearForm{{one, -one}}});
  CHECK(p.terms().size() == 2);
  CHECK(p.terms().at({2, 0}) == one);
  CHECK(p.terms().at({0, 2}) == -one);
  CHECK(p.is_homogeneous(2));
  CHECK(forms::coefficients_in_base(p));
  MultiPoly q(k, 1);
  q.add_term({1}, FieldElement::generator(k));
  CHECK(!forms::coefficients_in_base(q));
  CHECK_THROWS_AS(forms::expand_product({}), noname::Error);

  // Rows of M^-1 for the swap example: x = M^-1 y.
  const KMatrix m(k, {{s2_elem(k, 1, 1), s2_elem(k, 1, -1)}, {s2_elem(k, 1, -1), s2_elem(k, 1, 1)}});
  const auto inv = forms::invert_exact(m);
  const auto xy = forms::expand_product({LinearForm{inv.row(0)}, LinearForm{inv.row(1)}});
  CHECK(xy.is_homogeneous(2));
  CHECK(forms::coefficients_in_base(xy));
  (void)zero;
}

TEST_CASE("expand_product is homogeneous of degree n") {
  std::mt19937_64 rng(31);
  const auto k = cyclotomic5();
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<LinearForm> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(random_linear(k, n, rng));
    CHECK(forms::expand_product(fs).is_homogeneous(static_cast<unsigned>(n)));
  }
}

TEST_CASE("rendering") {
  const auto c4 = load_fixture("c4_signed.json");
  const auto& k = c4.field;
  forms::RenderOptions opts{"r5", forms::RenderBasis::shifted};
  CHECK(forms::render_element(FieldElement::generator(k), {"r5"}) == "r5");
  auto r = [&](unsigned e) { return power(k, e); };
  const AffineForm y1{r(3) + r(4), {r(1) - r(4), r(2) - r(3), FieldElement::zero(k)}};
  CHECK(forms::render_affine(y1, opts) == "(r5^3+r5^4) + (r5−r5^4)·z1 + (r5^2−r5^3)·z2");
  CHECK(forms::render(y1, forms::Style::text, opts) == forms::render_affine(y1, opts));
  CHECK(forms::render_affine(AffineForm::zero(k, 3), opts) == "0");
  CHECK(forms::render_linear(LinearForm::zero(k, 2)) == "0");
  CHECK(forms::render_element(FieldElement::one(k), opts) == "1");
  CHECK(forms::render_element(power(k, 4), {"r5"}) == "−1−r5−r5^2−r5^3");
  CHECK(forms::render_linear(LinearForm::unit(k, 2, 1)) == "x2");
  CHECK(forms::render_affine_in_x(y1, opts).find("/(1+x1)") != std::string::npos);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(2);
  for (const auto& k : {cyclotomic5(), make_field(BaseField::prime(3), {1, 0, 1})}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_element(k, rng);
      CHECK(forms::element_from_json(k, forms::to_json(a)) == a);
    }
  }
  const auto k = cyclotomic5();
  CHECK(forms::element_from_json(k, nlohmann::json::parse(R"([1, "-2/3"])")) ==
        FieldElement(k, {Scalar(Rational(1)), Scalar(Rational(-2, 3))}));
  CHECK_THROWS_AS(forms::element_from_json(k, nlohmann::json::parse("[1,2,3,4,5]")), noname::Error);
  CHECK_THROWS_AS(forms::element_from_json(k, nlohmann::json::parse(R"(["x"])")), noname::Error);
  CHECK_THROWS_AS(forms::element_from_json(k, nlohmann::json::parse("1.5")), noname::Error);
  const LinearForm f{{FieldElement::one(k), FieldElement::generator(k)}};
  CHECK(forms::to_json(f).dump() == forms::render(f, forms::Style::json));
}
