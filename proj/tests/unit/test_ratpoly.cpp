#include <doctest.h>

#include <random>

#include "hypzeros/error.hpp"
#include "hypzeros/ratpoly.hpp"
#include "support.hpp"

using namespace hypzeros;
using hypzeros::testing::Q;

namespace {
const RatPoly z = RatPoly::monomial(1, 1);
const RatPoly one = RatPoly::constant(1);

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected hypzeros::Error");
  return ErrorKind::Parse;
}
}  // namespace

TEST_CASE("construction strips trailing zeros") {
  const RatPoly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(p.coefficients().size() == 2);
  CHECK(RatPoly{0, 0}.is_zero());
  CHECK(kind_of([] { return RatPoly().degree(); }) == ErrorKind::ZeroPolynomial);
  CHECK(p.coefficient(7) == Rational(0));
  CHECK((z * z - one).str() == "z^2 - 1");
}

TEST_CASE("leading coefficient") {
  CHECK(leading_coefficient(RatPoly{1, -1, 3}) == Rational(3));
  CHECK(leading_coefficient(RatPoly::constant(5)) == Rational(5));
  CHECK(leading_coefficient(z) == Rational(1));
  CHECK(kind_of([] { return leading_coefficient(RatPoly()); }) ==
        ErrorKind::ZeroPolynomial);
}

TEST_CASE("derivative") {
  CHECK(derivative(z * z - one) == RatPoly{0, 2});
  CHECK(derivative(RatPoly::constant(7)).is_zero());
  CHECK(derivative(z * z * z + z) == RatPoly{1, 0, 3});
  CHECK(derivative(RatPoly()).is_zero());
}

TEST_CASE("division examples") {
  auto d = divide(z * z - one, RatPoly{0, 2});
  CHECK(d.quotient == RatPoly{0, Q("1/2")});
  CHECK(d.remainder == RatPoly{-1});

  d = divide(z * z * z, z);
  CHECK(d.quotient == z * z);
  CHECK(d.remainder.is_zero());

  d = divide(z * z + one, z - one);
  CHECK(d.quotient == z + one);
  CHECK(d.remainder == RatPoly{2});

  CHECK(kind_of([] { return divide(z, RatPoly()); }) == ErrorKind::DivisorZero);
  CHECK(kind_of([] { return divide(z, z * z); }) == ErrorKind::DegreeOrder);
}

TEST_CASE("division reconstructs the dividend") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> deg(0, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t dg = deg(rng), df = deg(rng);
    if (df < dg) std::swap(df, dg);
    const RatPoly f = testing::random_poly(rng, df);
    const RatPoly g = testing::random_poly(rng, dg);
    const auto [q, r] = divide(f, g);
    CHECK(q * g + r == f);
    CHECK((r.is_zero() || r.degree() < g.degree()));
  }
}

TEST_CASE("derivative lowers the degree by one") {
  std::mt19937_64 rng(12);
  for (std::size_t d = 1; d < 10; ++d) {
    const RatPoly p = testing::random_poly(rng, d);
    CHECK(derivative(p).degree() == d - 1);
  }
}

TEST_CASE("evaluation, powers and substitutions") {
  const RatPoly p{1, -3, 2};  // 2z^2 - 3z + 1
  CHECK(p.evaluate(Rational(1, 2)) == Rational(0));
  CHECK(power(z - one, 3) == RatPoly{-1, 3, -3, 1});
  CHECK(power(p, 0) == one);
  // p(1 - z) = 2(1-z)^2 - 3(1-z) + 1 = 2z^2 - z
  CHECK(compose_affine(p, -1, 1) == RatPoly{0, -1, 2});
  // (x+1)^2 p(2/(x+1)) = (x+1)^2 - 6(x+1) + 8
  const RatPoly h = homogenize(p, 2, RatPoly::constant(2), RatPoly{1, 1});
  CHECK(h == RatPoly{3, -4, 1});
}

TEST_CASE("coefficients stay reduced under arithmetic") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const RatPoly a = testing::random_poly(rng, 4);
    const RatPoly b = testing::random_poly(rng, 3);
    const RatPoly combined = a * b + a - b;
    for (const auto& coef : combined.coefficients()) {
      const mpq_class& raw = coef.raw();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), raw.get_num_mpz_t(), raw.get_den_mpz_t());
      CHECK(g == 1);
      CHECK(raw.get_den() > 0);
    }
  }
}
