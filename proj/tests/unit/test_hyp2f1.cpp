#include <doctest.h>

#include <optional>
#include <random>

#include "hypzeros/error.hpp"
#include "hypzeros/hyp2f1.hpp"
#include "support.hpp"

using namespace hypzeros;
using hypzeros::testing::Q;

namespace {
ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected hypzeros::Error");
  return ErrorKind::Parse;
}

constexpr JacobiRep kReps[] = {JacobiRep::ShiftedArgument,
                               JacobiRep::InverseArgument,
                               JacobiRep::MobiusArgument};
}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3, 2) == Rational(12));
  CHECK(pochhammer(Q("-7/3"), 0) == Rational(1));
  CHECK(pochhammer(0, 0) == Rational(1));
  CHECK(pochhammer(-2, 3) == Rational(0));
  CHECK(pochhammer(Q("1/2"), 3) == Q("15/8"));
}

TEST_CASE("pochhammer shift identity") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = testing::random_rational(rng);
    for (unsigned k = 0; k < 8; ++k) {
      CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + Rational(long(k))));
      CHECK(pochhammer(a, k + 1) == a * pochhammer(a + Rational(1), k));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { return HypParams::make(4, 0, 1); }) ==
        ErrorKind::InvalidParams);
  CHECK(kind_of([] { return HypParams::make(4, -3, 1); }) ==
        ErrorKind::InvalidParams);
  CHECK(kind_of([] { return HypParams::make(4, 1, -2); }) ==
        ErrorKind::InvalidParams);
  CHECK(kind_of([] { return HypParams::make(0, 1, 1); }) ==
        ErrorKind::InvalidParams);
  // -n itself is allowed: only 0..-(n-1) are excluded.
  CHECK_NOTHROW(HypParams::make(4, -4, -4));
  CHECK_NOTHROW(HypParams::make(4, Q("-1/2"), Q("-3/2")));
  CHECK_FALSE(HypParams::violation(3, -2, 1).empty());
}

TEST_CASE("build_2f1 matches the low-degree expansions") {
  const Rational b = Q("7/3"), c = Q("-5/2");
  const RatPoly two = build_2f1(HypParams::make(2, b, c));
  CHECK(two == RatPoly{1, Rational(-2) * b / c,
                       b * (b + 1) / (c * (c + 1))});
  CHECK(build_2f1(HypParams::make(1, 3, 2)) == RatPoly{1, Q("-3/2")});
  const RatPoly three = build_2f1(HypParams::make(3, b, c));
  CHECK(three == RatPoly{1, Rational(-3) * b / c,
                         Rational(3) * b * (b + 1) / (c * (c + 1)),
                         -b * (b + 1) * (b + 2) / (c * (c + 1) * (c + 2))});
  CHECK(build_2f1(HypParams::make(2, 2, 1)) == RatPoly{1, -4, 3});
  // b = c collapses to (1 - z)^n.
  CHECK(build_2f1(HypParams::make(3, 5, 5)) == power(RatPoly{1, -1}, 3));
}

TEST_CASE("terminating series may lose degree when b is excluded") {
  CHECK(terminating_2f1(3, -1, 2) == RatPoly{1, Q("3/2")});
  CHECK(kind_of([] { return terminating_2f1(3, 1, -1); }) ==
        ErrorKind::InvalidParams);
}

TEST_CASE("Pfaff transformation") {
  const auto [scale, partner] = pfaff_partner(HypParams::make(1, 3, 2));
  CHECK(scale == Q("-1/2"));
  CHECK(partner.c == Rational(1));
  for (auto p : {HypParams::make(1, 3, 2), HypParams::make(2, 5, 1),
                 HypParams::make(4, Q("7/2"), Q("3/2"))}) {
    const auto sides = pfaff_sides(p);
    CHECK(sides.direct == sides.transformed);
    CHECK(sides.direct == build_2f1(p));
  }
  // 1-n+b-c = -2 is excluded for n = 3; the sides still agree.
  CHECK(kind_of([] { return pfaff_partner(HypParams::make(3, 1, 1)); }) ==
        ErrorKind::PartnerInvalid);
  const auto sides = pfaff_sides(HypParams::make(3, 1, 1));
  CHECK(sides.direct == sides.transformed);
}

TEST_CASE("Pfaff partner is an involution") {
  std::mt19937_64 rng(22);
  int tested = 0;
  while (tested < 50) {
    const HypParams p = testing::random_params(rng, 10);
    const auto sides = pfaff_sides(p);
    CHECK(sides.direct == sides.transformed);
    std::optional<PfaffPartner> first;
    try {
      first = pfaff_partner(p);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PartnerInvalid);
      continue;
    }
    const auto second = pfaff_partner(first->partner);
    CHECK(second.partner == p);
    CHECK(first->scale * second.scale == Rational(1));
    ++tested;
  }
}

TEST_CASE("Jacobi polynomials") {
  const RatPoly x = RatPoly::monomial(1, 1);
  CHECK(jacobi_poly({1, 0, 0}) == x);
  CHECK(jacobi_poly({2, 0, 0}) == RatPoly{Q("-1/2"), 0, Q("3/2")});
  CHECK(jacobi_poly({1, 1, 1}) == RatPoly{0, 2});
  CHECK(jacobi_reference({2, 0, 0}) == jacobi_poly({2, 0, 0}));
  // Value at 1 is (alpha+1)_n / n!.
  const JacobiParams j{5, Q("3/4"), Q("-2/3")};
  CHECK(jacobi_reference(j).evaluate(1) == pochhammer(j.alpha + 1, 5) / factorial(5));
  // P_1 = ((alpha+beta+2) x + alpha - beta) / 2
  const JacobiParams k{1, Q("5/3"), Q("-1/7")};
  CHECK(jacobi_reference(k) ==
        RatPoly{(k.alpha - k.beta) / 2, (k.alpha + k.beta + 2) / 2});
}

TEST_CASE("Jacobi representation examples") {
  CHECK(verify_jacobi_representation(JacobiRep::ShiftedArgument, {1, 0, 0}));
  const JacobiParams degenerate{2, Q("-3/2"), Q("-3/2")};
  CHECK(verify_jacobi_representation(JacobiRep::InverseArgument, degenerate));
  CHECK(jacobi_representation_rhs(JacobiRep::InverseArgument, degenerate) ==
        RatPoly{Q("-1/8")});
  CHECK(verify_jacobi_representation(JacobiRep::MobiusArgument,
                                     {3, Q("-3/2"), Q("-1/2")}));
}

TEST_CASE("Jacobi representations hold at random parameters") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<unsigned> deg(1, 8);
  for (JacobiRep rep : kReps) {
    int tested = 0, attempts = 0;
    while (tested < 15 && ++attempts < 500) {
      const JacobiParams j{deg(rng), testing::random_rational(rng, 6),
                           testing::random_rational(rng, 6)};
      bool holds = false;
      try {
        holds = verify_jacobi_representation(rep, j);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidParams);
        continue;
      }
      CAPTURE(to_string(rep));
      CHECK(holds);
      ++tested;
    }
    CHECK(tested == 15);
  }
}

TEST_CASE("a wrong representation is detected") {
  const JacobiParams j{3, Q("1/2"), Q("1/3")};
  const RatPoly ref = jacobi_reference(j);
  const JacobiParams swapped{3, j.beta, j.alpha};
  CHECK(jacobi_representation_rhs(JacobiRep::ShiftedArgument, swapped) != ref);
}
