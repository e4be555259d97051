#include "noname/field/irreducible.hpp"

#include <optional>

#include "noname/error.hpp"

namespace noname::field {

using exact::BaseField;
using exact::poly_divmod;
using exact::Rational;
using exact::Scalar;
using exact::UniPoly;

namespace {

constexpr std::size_t kExhaustiveLimit = 200000;
constexpr std::size_t kQuadraticSearchLimit = 5000000;
const mpz_class kDivisorLimit("1000000000000");

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

UniPoly t_poly(const BaseField& base) { return UniPoly::monomial(base, Scalar::one(base), 1); }

/// Positive divisors of |n|, or nullopt when |n| is too large to enumerate.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || n > kDivisorLimit) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k * k != n) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Primitive integer polynomial proportional to m.
std::vector<mpz_class> to_integer(const UniPoly& m) {
  mpz_class l = 1;
  for (const auto& c : m.coefficients()) {
    mpz_class den = c.as_rational().denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : m.coefficients()) {
    const auto& q = c.as_rational();
    out.push_back(q.numerator() * (l / q.denominator()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& v : out) v /= content;
  return out;
}

UniPoly from_integer(const std::vector<mpz_class>& c) {
  std::vector<Scalar> coeffs;
  for (const auto& v : c) coeffs.emplace_back(Rational(v));
  return UniPoly(BaseField::rationals(), std::move(coeffs));
}

bool divides(const UniPoly& factor, const UniPoly& m) { return poly_divmod(m, factor).remainder.is_zero(); }

IrreducibleResult check_prime(const UniPoly& m) {
  const BaseField base = m.base();
  const auto d = static_cast<std::size_t>(m.degree());
  const std::uint64_t p = base.characteristic();
  std::size_t total = 0;
  bool small = true;
  for (std::size_t k = 1, count = 1; k <= d / 2; ++k) {
    if (count > kExhaustiveLimit / p) {
      small = false;
      break;
    }
    count *= p;
    total += count;
    if (total > kExhaustiveLimit) {
      small = false;
      break;
    }
  }
  if (!small) {
    return rabin_irreducible(m) ? IrreducibleResult{IrreducibleVerdict::irreducible, "Rabin test over " + base.to_string()}
                                : IrreducibleResult{IrreducibleVerdict::reducible, "fails Rabin test over " + base.to_string()};
  }
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::vector<std::uint64_t> digits(k, 0);
    while (true) {
      std::vector<Scalar> coeffs;
      for (auto v : digits) coeffs.emplace_back(exact::PrimeFieldElement(v, p));
      coeffs.push_back(Scalar::one(base));
      UniPoly candidate(base, std::move(coeffs));
      if (divides(candidate, m)) {
        return {IrreducibleVerdict::reducible, "divisible by " + candidate.to_string()};
      }
      std::size_t pos = 0;
      while (pos < k && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == k) break;
    }
  }
  return {IrreducibleVerdict::irreducible, "no monic divisor of degree <= " + std::to_string(d / 2)};
}

std::optional<std::string> rational_root(const std::vector<mpz_class>& f, bool& searched) {
  searched = false;
  if (f.front() == 0) return std::string("t divides the modulus");
  const auto num = divisors(f.front());
  const auto den = divisors(f.back());
  if (!num || !den) return std::nullopt;
  searched = true;
  const UniPoly poly = from_integer(f);
  for (const auto& a : *num) {
    for (const auto& b : *den) {
      for (int s : {1, -1}) {
        const Rational r(a * s, b);
        if (exact::poly_eval(poly, Scalar(r)).is_zero()) return "root " + r.to_string();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> quadratic_factor(const std::vector<mpz_class>& f, bool& searched) {
  searched = false;
  const auto lead = divisors(f.back());
  const auto tail = divisors(f.front());
  if (!lead || !tail) return std::nullopt;
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class root = sqrt(norm2);
  if (root * root < norm2) root += 1;
  const mpz_class bound = 2 * root;  // Mignotte: |b| <= C(2,1) * ||f||_2
  const mpz_class count = mpz_class(static_cast<unsigned long>(lead->size() * tail->size() * 2)) * (2 * bound + 1);
  if (count > kQuadraticSearchLimit) return std::nullopt;
  searched = true;
  const UniPoly poly = from_integer(f);
  for (const auto& a : *lead) {
    for (const auto& c0 : *tail) {
      for (int s : {1, -1}) {
        for (mpz_class b = -bound; b <= bound; ++b) {
          const UniPoly q = from_integer({c0 * s, b, a});
          if (divides(q, poly)) return "quadratic factor " + q.to_string();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> irreducible_mod_small_prime(const std::vector<mpz_class>& f) {
  for (std::uint64_t p = 2; p < 100; ++p) {
    if (!exact::is_prime(p)) continue;
    if (f.back() % static_cast<unsigned long>(p) == 0) continue;
    const BaseField base = BaseField::prime(p);
    std::vector<Scalar> coeffs;
    for (const auto& c : f) coeffs.push_back(Scalar::from_rational(base, Rational(c)));
    if (rabin_irreducible(UniPoly(base, std::move(coeffs)).monic())) return p;
  }
  return std::nullopt;
}

IrreducibleResult check_rational(const UniPoly& m) {
  const auto f = to_integer(m);
  const auto d = m.degree();
  bool root_searched = false;
  if (auto root = rational_root(f, root_searched)) return {IrreducibleVerdict::reducible, *root};
  if (d >= 4) {
    bool quad_searched = false;
    if (auto q = quadratic_factor(f, quad_searched)) return {IrreducibleVerdict::reducible, *q};
    if (root_searched && quad_searched && d <= 5) {
      return {IrreducibleVerdict::irreducible, "no rational root and no quadratic factor"};
    }
  } else if (root_searched) {
    return {IrreducibleVerdict::irreducible, "degree <= 3 with no rational root"};
  }
  if (auto p = irreducible_mod_small_prime(f)) {
    return {IrreducibleVerdict::irreducible, "irreducible modulo " + std::to_string(*p)};
  }
  return {IrreducibleVerdict::inconclusive, "no linear or quadratic factor found; degree " + std::to_string(d) + " not decided"};
}

}  // namespace

bool rabin_irreducible(const UniPoly& f) {
  const BaseField base = f.base();
  if (!base.is_prime_field()) throw Error(ErrorKind::usage, "Rabin test needs a prime-field polynomial");
  if (f.degree() < 1) return false;
  const UniPoly m = f.monic();
  const auto d = static_cast<std::uint64_t>(m.degree());
  const mpz_class p(static_cast<unsigned long>(base.characteristic()));
  const UniPoly t = t_poly(base);
  // frob[k] = t^(p^k) mod m
  std::vector<UniPoly> frob{poly_divmod(t, m).remainder};
  for (std::uint64_t k = 1; k <= d; ++k) frob.push_back(exact::poly_powmod(frob.back(), p, m));
  if (!(frob[d] == poly_divmod(t, m).remainder)) return false;
  for (auto q : prime_divisors(d)) {
    const UniPoly h = frob[d / q] - t;
    if (h.is_zero()) return false;
    if (exact::poly_xgcd(h, m).gcd.degree() != 0) return false;
  }
  return true;
}

IrreducibleResult check_irreducible(const UniPoly& m) {
  if (m.degree() < 1) throw Error(ErrorKind::usage, "irreducibility of a constant polynomial");
  if (m.degree() == 1) return {IrreducibleVerdict::irreducible, "linear"};
  return m.base().is_rational() ? check_rational(m) : check_prime(m);
}

}  // namespace noname::field
