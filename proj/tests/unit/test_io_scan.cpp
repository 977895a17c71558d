#include <doctest.h>

#include <random>
#include <sstream>

#include "hypzeros/error.hpp"
#include "hypzeros/json_io.hpp"
#include "hypzeros/oracle.hpp"
#include "hypzeros/scan.hpp"
#include "hypzeros/sturm.hpp"
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
}  // namespace

TEST_CASE("rational and polynomial JSON") {
  CHECK(to_json(Q("-3/4")) == Json("-3/4"));
  CHECK(rational_from_json(Json("10/4")) == Q("5/2"));
  const RatPoly p{1, Q("-1/2"), 3};
  CHECK(to_json(p).dump() == R"(["1","-1/2","3"])");
  CHECK(ratpoly_from_json(to_json(p)) == p);
  CHECK(kind_of([] { return rational_from_json(Json(0.5)); }) == ErrorKind::Parse);
}

TEST_CASE("trace JSON round trip") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const HypParams p = testing::random_params(rng, 8);
    for (bool normalize : {false, true}) {
      SequenceTrace t = build_sequence(build_2f1(p), {.normalize = normalize});
      if (!normalize) annotate_2f1_steps(t, p);
      const Json j = to_json(t);
      CHECK(trace_from_json(Json::parse(j.dump())) == t);
    }
  }
}

TEST_CASE("reports serialize with explicit tags") {
  CHECK(prediction_to_json(std::nullopt) == Json{{"status", "NotCovered"}});
  ZeroReport r;
  r.unit = 3;
  r.tail = 1;
  r.tag = "orthogonality (ii)";
  const Json j = to_json(r);
  CHECK(j["unit"] == 3);
  CHECK(j["tail"] == 1);
  CHECK(j["source"] == "Predicted");

  const Json roots = to_json(find_roots(RatPoly{2, -3, 1}));
  REQUIRE(roots["roots"].size() == 2);
  CHECK(roots["roots"][0].size() == 2);
  CHECK(roots["residuals"].size() == 2);
}

TEST_CASE("rational ranges") {
  const auto r = RationalRange::parse("-1:1:1/2");
  CHECK(r.values() == std::vector<Rational>{-1, Q("-1/2"), 0, Q("1/2"), 1});
  CHECK(RationalRange::parse("0:1:2/3").values().size() == 2);
  CHECK(kind_of([] { return RationalRange::parse("0:1"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { return RationalRange::parse("0:0.5:1"); }) ==
        ErrorKind::Parse);
}

TEST_CASE("scan settings validation") {
  ScanSpec s;
  s.n = 4;
  s.b_range = RationalRange::parse("1:-1:1/2");
  s.c_range = RationalRange::parse("0:1:1/2");
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidParams);
  s.b_range = RationalRange::parse("-1:1:0");
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidParams);
  s.b_range = RationalRange::parse("-1:1:1/2");
  s.margin = Rational(-1);
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidParams);
  s.margin = Rational(0);
  s.columns = {"c", "nope"};
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidParams);
  s.columns = {};
  s.n = 1;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidParams);
}

TEST_CASE("scan rows and CSV") {
  ScanSpec s;
  s.n = 4;
  s.b_range = RationalRange::parse("-8:8:1/2");
  s.c_range = RationalRange::parse("-8:8:1/2");
  s.margin = Q("1/20");
  const auto rows = run_scan(s);
  REQUIRE_FALSE(rows.empty());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i - 1].c < rows[i].c ||
                         (rows[i - 1].c == rows[i].c && rows[i - 1].b < rows[i].b);
    CHECK(ordered);
  }
  for (const auto& r : rows) {
    CAPTURE(r.b.str());
    CAPTURE(r.c.str());
    CHECK(r.agree);
    CHECK(HypParams::violation(4, r.b, r.c).empty());
  }
  std::ostringstream os;
  write_csv(os, rows);
  const std::string csv = os.str();
  CHECK(csv.rfind("c,b,region,sturm,pred_neg,pred_unit,pred_tail,pred_nonreal,"
                  "num_neg,num_unit,num_tail,num_nonreal,agree\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == long(rows.size()) + 1);

  std::ostringstream sub;
  write_csv(sub, rows, {"b", "agree"});
  CHECK(sub.str().rfind("b,agree\n", 0) == 0);
}

TEST_CASE("small-degree scan agrees everywhere") {
  ScanSpec s;
  s.n = 2;
  s.b_range = RationalRange::parse("-6:6:1/2");
  s.c_range = RationalRange::parse("-6:6:1/2");
  s.margin = Q("1/20");
  for (const auto& r : run_scan(s)) CHECK(r.agree);
}
