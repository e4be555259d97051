#include <doctest.h>

#include "noname/error.hpp"
#include "noname/field/galois.hpp"
#include "noname/field/irreducible.hpp"
#include "support/support.hpp"

using namespace testing;
using noname::ErrorKind;
using field::Automorphism;
using field::IrreducibleVerdict;

namespace {

std::vector<Scalar> q_coords(const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (auto x : v) out.emplace_back(Rational(x));
  return out;
}

field::GaloisPresentation c4_presentation() {
  const auto k = cyclotomic5();
  return field::close_automorphisms(k, {Automorphism(power(k, 2))});
}

field::GaloisPresentation sqrt2_presentation() {
  const auto k = sqrt2();
  return field::close_automorphisms(k, {Automorphism(-FieldElement::generator(k))});
}

field::GaloisPresentation f4_presentation() {
  const auto k = make_field(BaseField::prime(2), {1, 1, 1});
  return field::close_automorphisms(k, {field::frobenius(k, 1)});
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  const auto k = sqrt2();
  const auto t = FieldElement::generator(k);
  CHECK(t * t == FieldElement::from_int(k, 2));
  const auto c = cyclotomic5();
  const auto r = FieldElement::generator(c);
  CHECK((r * power(c, 4)).is_one());
  CHECK(power(c, 4) == r.inverse());
  CHECK(r.pow(mpz_class(-1)) == power(c, 4));
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const auto a = random_element(c, rng);
    if (a.is_zero()) continue;
    CHECK((a / a).is_one());
  }
  CHECK_THROWS_AS(FieldElement::zero(c).inverse(), noname::Error);
}

TEST_CASE("coordinates") {
  const auto c = cyclotomic5();
  CHECK(field::coords_over_base(power(c, 2)) == q_coords({0, 0, 1, 0}));
  CHECK(field::coords_over_base(power(c, 4)) == q_coords({-1, -1, -1, -1}));
  CHECK(field::coords_over_base(FieldElement::zero(c)) == q_coords({0, 0, 0, 0}));
  CHECK(FieldElement(c, q_coords({0, 0, 0, 0, 1})) == power(c, 4));
}

TEST_CASE("moduli are checked") {
  const auto q = BaseField::rationals();
  CHECK_THROWS_AS(make_field(q, {-1, 0, 1}), noname::Error);
  CHECK_THROWS_AS(make_field(q, {4}), noname::Error);
  CHECK(make_field(q, {2, 0, 2})->modulus() == UniPoly::from_ints(q, {1, 0, 1}));
  CHECK(cyclotomic5()->irreducibility() == field::Irreducibility::verified);
  CHECK_THROWS_AS(make_field(BaseField::prime(2), {1, 0, 1}), noname::Error);
}

TEST_CASE("irreducibility check") {
  const auto q = BaseField::rationals();
  CHECK(field::check_irreducible(UniPoly::from_ints(q, {-2, 0, 1})).verdict == IrreducibleVerdict::irreducible);
  CHECK(field::check_irreducible(UniPoly::from_ints(q, {4, 0, 0, 0, 1})).verdict == IrreducibleVerdict::reducible);
  CHECK(field::check_irreducible(UniPoly::from_ints(q, {2, 0, 3, 0, 1})).verdict == IrreducibleVerdict::reducible);
  CHECK(field::check_irreducible(UniPoly::from_ints(q, {-2, 0, 0, 0, 1})).verdict == IrreducibleVerdict::irreducible);
  const auto f2 = BaseField::prime(2);
  CHECK(field::check_irreducible(UniPoly::from_ints(f2, {1, 1, 0, 1})).verdict == IrreducibleVerdict::irreducible);
  CHECK(field::check_irreducible(UniPoly::from_ints(f2, {1, 1, 1, 1})).verdict == IrreducibleVerdict::reducible);
  CHECK(field::rabin_irreducible(UniPoly::from_ints(f2, {1, 1, 0, 0, 1})));
  CHECK(!field::rabin_irreducible(UniPoly::from_ints(f2, {1, 0, 1, 0, 1})));
  // (t^2+t+1)^4 over F_2 has no roots and no linear factor.
  auto g = UniPoly::from_ints(f2, {1, 1, 1});
  CHECK(field::check_irreducible(g * g * g * g).verdict == IrreducibleVerdict::reducible);
}

TEST_CASE("degree 8 modulus from the dihedral fixture is trusted, not proven") {
  const auto q = BaseField::rationals();
  const auto m = UniPoly::from_ints(q, {1, 0, 28, 0, 2, 0, 4, 0, 1});
  CHECK(field::check_irreducible(m).verdict != IrreducibleVerdict::reducible);
  const auto k = field::FieldDescriptor::create(m, {true});
  CHECK(k->degree() == 8);
}

TEST_CASE("automorphisms of the fifth cyclotomic field") {
  const auto c = cyclotomic5();
  const Automorphism sigma(power(c, 2));
  const auto r = FieldElement::generator(c);
  CHECK(sigma(r) == power(c, 2));
  const auto sigma3 = field::compose(sigma, field::compose(sigma, sigma));
  CHECK(sigma3(r) == power(c, 3));
  CHECK(sigma(FieldElement::from_int(c, 7)) == FieldElement::from_int(c, 7));
  CHECK(field::compose(sigma, sigma).image() == power(c, 4));
  CHECK(field::compose(sigma, Automorphism::identity(c)) == sigma);
  CHECK(field::compose(sigma, sigma3).is_identity());
  CHECK_THROWS_AS(Automorphism(FieldElement::from_int(c, 2)), noname::Error);
}

TEST_CASE("automorphisms are homomorphisms") {
  std::mt19937_64 rng(8);
  for (const auto& p : {c4_presentation(), sqrt2_presentation(), f4_presentation()}) {
    for (const auto& s : p.automorphisms) {
      for (int n = 0; n < 30; ++n) {
        const auto a = random_element(p.field, rng), b = random_element(p.field, rng);
        CHECK(s(a + b) == s(a) + s(b));
        CHECK(s(a * b) == s(a) * s(b));
      }
    }
  }
}

TEST_CASE("presentation verification") {
  const auto c4 = c4_presentation();
  CHECK(c4.order() == 4);
  CHECK(field::verify_presentation(c4).ok);
  const auto k = sqrt2();
  const auto only_id = field::close_automorphisms(k, {});
  const auto report = field::verify_presentation(only_id);
  CHECK(!report.ok);
  CHECK(!report.failure.empty());
  CHECK(field::verify_presentation(sqrt2_presentation()).ok);

  // Group axioms hold but the fixed field is too large.
  const auto q4 = make_field(BaseField::rationals(), {-2, 0, 0, 0, 1});
  field::GaloisPresentation small{q4, {Automorphism::identity(q4), Automorphism(-FieldElement::generator(q4))}};
  CHECK(!field::verify_presentation(small).ok);
  // Listing an element twice.
  field::GaloisPresentation twice = c4;
  twice.automorphisms[3] = twice.automorphisms[1];
  CHECK(!field::verify_presentation(twice).ok);
}

TEST_CASE("normal elements") {
  const auto c4 = c4_presentation();
  CHECK(field::is_normal(FieldElement::generator(c4.field), c4));
  CHECK(!field::is_normal(FieldElement::one(c4.field), c4));
  CHECK(exact::rank(field::conjugate_matrix(FieldElement::one(c4.field), c4)) == 1);

  const auto p = load_fixture("d8.json");
  const auto alpha = cli::element_from(p.field, *p.config.alpha);
  CHECK(field::is_normal(alpha, p.iso.presentation()));
}

TEST_CASE("normal element search") {
  const auto s2 = sqrt2_presentation();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto a = field::find_normal(s2, seed);
    CHECK(!a.coords()[0].is_zero());
    CHECK(!a.coords()[1].is_zero());
    CHECK(a == field::find_normal(s2, seed));
  }
  const auto q1 = make_field(BaseField::rationals(), {0, 1});
  const auto trivial = field::close_automorphisms(q1, {});
  const auto a = field::find_normal(trivial, 1);
  CHECK(!a.is_zero());
  const auto f4 = f4_presentation();
  CHECK(field::is_normal(FieldElement::generator(f4.field), f4));
  CHECK(field::is_normal(field::find_normal(f4, 3), f4));
}

TEST_CASE("frobenius") {
  const auto f4 = make_field(BaseField::prime(2), {1, 1, 1});
  CHECK(field::frobenius(f4, 1).image() == FieldElement::generator(f4) + FieldElement::one(f4));
  CHECK(field::frobenius(f4, 2).is_identity());
  const auto f9 = make_field(BaseField::prime(3), {1, 0, 1});
  CHECK(field::frobenius(f9, 1).image() == -FieldElement::generator(f9));
  CHECK_THROWS_AS(field::frobenius(sqrt2(), 1), noname::Error);
}

TEST_CASE("frobenius has exact order d") {
  for (auto [p, coeffs] : std::vector<std::pair<std::uint64_t, std::vector<long>>>{
           {2, {1, 1, 1}}, {2, {1, 1, 0, 1}}, {3, {1, 0, 1}}, {2, {1, 1, 0, 0, 1}}, {5, {2, 0, 1}}}) {
    const auto k = make_field(BaseField::prime(p), coeffs);
    const auto phi = field::frobenius(k, 1);
    auto acc = phi;
    for (std::size_t e = 1; e < k->degree(); ++e) {
      CHECK(!acc.is_identity());
      acc = field::compose(phi, acc);
    }
    CHECK(acc.is_identity());
  }
}

TEST_CASE("is_normal agrees with the nullspace oracle") {
  std::mt19937_64 rng(99);
  for (const auto& p : {c4_presentation(), sqrt2_presentation(), f4_presentation()}) {
    for (int n = 0; n < 100; ++n) {
      const auto a = random_element(p.field, rng, 2);
      CHECK(field::is_normal(a, p) == oracle_normal(a, p));
    }
  }
}

TEST_CASE("base rank") {
  const auto c = cyclotomic5();
  CHECK(field::base_rank({FieldElement::one(c), FieldElement::from_int(c, 3)}) == 1);
  CHECK(field::independent_over_base({FieldElement::one(c), FieldElement::generator(c)}));
  CHECK(!field::independent_over_base({FieldElement::zero(c)}));
}
