#include <doctest.h>

#include <random>

#include "hypzeros/error.hpp"
#include "hypzeros/hyp2f1.hpp"
#include "hypzeros/sturm.hpp"
#include "support.hpp"

using namespace hypzeros;
using hypzeros::testing::Q;

namespace {
const RatPoly z = RatPoly::monomial(1, 1);

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected hypzeros::Error");
  return ErrorKind::Parse;
}

void check_trace_invariants(const SequenceTrace& t) {
  const auto& s = t.steps;
  REQUIRE(s.size() >= 2);
  if (!t.normalized) CHECK(s[1].f == derivative(s[0].f));
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    CHECK(s[k].k == k);
    CHECK(s[k + 1].f.degree() < s[k].f.degree());
  }
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    const StepRecord& st = s[k];
    REQUIRE(st.c.has_value());
    if (st.took_derivative_branch) {
      CHECK(st.c->is_zero());
      if (!t.normalized) CHECK(s[k + 1].f == derivative(st.f));
    } else if (!t.normalized) {
      REQUIRE(st.quotient.has_value());
      CHECK(s[k - 1].f == *st.quotient * st.f - s[k + 1].f);
      CHECK(*st.c == leading_coefficient(s[k + 1].f) /
                         leading_coefficient(s[k - 1].f));
    }
  }
}
}  // namespace

TEST_CASE("sequence examples") {
  auto t = run_sequence(z * z - RatPoly::constant(1));
  CHECK(t.c_values() == std::vector<Rational>{1});
  CHECK(t.classification == ZeroNature::AllRealSimple);

  t = run_sequence(z * z + RatPoly::constant(1));
  CHECK(t.c_values() == std::vector<Rational>{-1});
  CHECK(t.classification == ZeroNature::HasNonReal);

  t = run_sequence(z * z);
  CHECK(t.c_values() == std::vector<Rational>{0});
  CHECK(t.steps[1].took_derivative_branch);
  CHECK(t.classification == ZeroNature::AllRealWithMultiple);

  CHECK(kind_of([] { return run_sequence(z); }) == ErrorKind::DegreeTooSmall);
  CHECK(kind_of([] { return run_sequence(RatPoly::constant(3)); }) ==
        ErrorKind::DegreeTooSmall);
}

TEST_CASE("zero-remainder branch on z^k (z - 1)") {
  for (unsigned k = 2; k <= 4; ++k) {
    const RatPoly f = power(z, k) * (z - RatPoly::constant(1));
    const auto t = run_sequence(f);
    CHECK(t.classification == ZeroNature::AllRealWithMultiple);
    bool saw_branch = false;
    for (const auto& st : t.steps) {
      if (st.took_derivative_branch) {
        saw_branch = true;
        CHECK(st.c == Rational(0));
      }
    }
    CHECK(saw_branch);
    check_trace_invariants(t);
  }
}

TEST_CASE("an early zero remainder leaves fewer values and no negatives") {
  // (z-1)^2 (z-2)^2: the first remainder is nonzero, later steps stop short.
  const RatPoly f = power(z - RatPoly::constant(1), 2) *
                    power(z - RatPoly::constant(2), 2);
  const auto t = build_sequence(f);
  const auto c = t.c_values();
  for (const auto& v : c) CHECK(v.sign() >= 0);
  if (c.size() < 3) {
    CHECK_FALSE(t.classification.has_value());
    CHECK(kind_of([&] { return run_sequence(f); }) ==
          ErrorKind::IndeterminateTrace);
  } else {
    CHECK(t.classification == ZeroNature::AllRealWithMultiple);
  }
}

TEST_CASE("sign test on c values") {
  CHECK(classify_c_values(4, {1, 2, 3}) == ZeroNature::AllRealSimple);
  CHECK(classify_c_values(4, {1, 0, 3}) == ZeroNature::AllRealWithMultiple);
  CHECK(classify_c_values(4, {1, -2}) == ZeroNature::HasNonReal);
  CHECK_FALSE(classify_c_values(4, {1, 2}).has_value());
  CHECK(zero_nature_from_string(to_string(ZeroNature::HasNonReal)) ==
        ZeroNature::HasNonReal);
}

TEST_CASE("classify_2f1 examples") {
  CHECK(classify_2f1(HypParams::make(2, 2, 1)).classification ==
        ZeroNature::AllRealSimple);
  const auto t = classify_2f1(HypParams::make(4, 6, 1));
  CHECK(t.classification == ZeroNature::AllRealSimple);
  CHECK(t.c_values() ==
        std::vector<Rational>{Q("5/54"), Q("5/98"), Q("1/25")});
  CHECK(classify_2f1(HypParams::make(4, Q("1/2"), 1)).classification ==
        ZeroNature::HasNonReal);
  CHECK(classify_2f1(HypParams::make(2, Q("1/2"), 1)).c_values()[0].sign() < 0);
  // Theta annotations on (n=4, b=6, c=1).
  CHECK(t.steps[1].theta == Rational(-24));
  CHECK(t.steps[2].theta == Q("5/3"));
  CHECK(t.steps[3].theta == Q("-72/7"));
}

TEST_CASE("trace invariants on random polynomials") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> deg(2, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = build_sequence(testing::random_poly(rng, deg(rng)));
    check_trace_invariants(t);
  }
}

TEST_CASE("c values are invariant under nonzero scaling of f") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::size_t> deg(2, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const RatPoly f = testing::random_poly(rng, deg(rng));
    Rational s = testing::random_rational(rng);
    if (s.is_zero()) s = Rational(-3, 7);
    const auto a = build_sequence(f);
    const auto b = build_sequence(f * s);
    CHECK(a.c_values() == b.c_values());
    CHECK(a.classification == b.classification);
  }
}

TEST_CASE("normalized traces keep only the signs") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const RatPoly f = testing::random_poly(rng, 6);
    const auto exact = build_sequence(f);
    const auto norm = build_sequence(f, {.normalize = true});
    CHECK(norm.normalized);
    CHECK(norm.classification == exact.classification);
    const auto ce = exact.c_values(), cn = norm.c_values();
    REQUIRE(ce.size() == cn.size());
    for (std::size_t i = 0; i < ce.size(); ++i) {
      CHECK(cn[i] == Rational(ce[i].sign()));
    }
    for (std::size_t k = 1; k < norm.steps.size(); ++k) {
      CHECK(leading_coefficient(norm.steps[k].f).abs() == Rational(1));
    }
  }
}

TEST_CASE("proportionality") {
  const RatPoly p{1, 2, 3};
  CHECK(proportionality(p * Q("-5/2"), p) == Q("-5/2"));
  CHECK_FALSE(proportionality(RatPoly{1, 2, 4}, p).has_value());
  CHECK_FALSE(proportionality(RatPoly{1, 2}, p).has_value());
}
