#include "hypzeros/json_io.hpp"

#include "hypzeros/error.hpp"

namespace hypzeros {

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) {
    throw Error(ErrorKind::Parse, "rational must be a string");
  }
  return Rational::parse(j.get<std::string>());
}

Json to_json(const RatPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

RatPoly ratpoly_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorKind::Parse, "polynomial must be an array");
  }
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  RatPoly p(std::move(c));
  if (p.coefficients().size() != j.size()) {
    throw Error(ErrorKind::Parse, "polynomial has trailing zero coefficients");
  }
  return p;
}

Json to_json(const SequenceTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json row;
    row["k"] = s.k;
    row["f"] = to_json(s.f);
    if (s.quotient) row["q"] = to_json(*s.quotient);
    if (s.remainder) row["r"] = to_json(*s.remainder);
    row["derivative_branch"] = s.took_derivative_branch;
    if (s.c) row["c"] = to_json(*s.c);
    if (s.theta) row["theta"] = to_json(*s.theta);
    steps.push_back(std::move(row));
  }
  Json out;
  out["steps"] = std::move(steps);
  out["normalized"] = t.normalized;
  out["classification"] =
      t.classification ? to_string(*t.classification) : "Indeterminate";
  return out;
}

SequenceTrace trace_from_json(const Json& j) {
  SequenceTrace t;
  for (const auto& row : j.at("steps")) {
    StepRecord s;
    s.k = row.at("k").get<std::size_t>();
    s.f = ratpoly_from_json(row.at("f"));
    if (row.contains("q")) s.quotient = ratpoly_from_json(row["q"]);
    if (row.contains("r")) s.remainder = ratpoly_from_json(row["r"]);
    s.took_derivative_branch = row.at("derivative_branch").get<bool>();
    if (row.contains("c")) s.c = rational_from_json(row["c"]);
    if (row.contains("theta")) s.theta = rational_from_json(row["theta"]);
    t.steps.push_back(std::move(s));
  }
  t.normalized = j.at("normalized").get<bool>();
  const auto cls = j.at("classification").get<std::string>();
  if (cls != "Indeterminate") t.classification = zero_nature_from_string(cls);
  return t;
}

Json to_json(const CrosscheckReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json row;
    row["k"] = e.k;
    row["c_trace"] = to_json(e.c_trace);
    row["c_closed"] = e.c_closed ? to_json(*e.c_closed) : Json("undefined");
    row["theta"] = e.theta ? to_json(*e.theta) : Json("undefined");
    row["c_ok"] = e.c_ok;
    row["proportionality_ok"] = e.proportionality_ok;
    if (!e.note.empty()) row["note"] = e.note;
    entries.push_back(std::move(row));
  }
  Json out;
  out["n"] = r.params.n;
  out["b"] = to_json(r.params.b);
  out["c"] = to_json(r.params.c);
  out["passed"] = r.passed();
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const RegionLabel& l) {
  Json out;
  out["scheme"] = to_string(l.scheme);
  out["region"] = l.region;
  out["source"] = l.source;
  out["detail"] = l.detail;
  return out;
}

Json to_json(const ZeroReport& r) {
  Json out;
  out["status"] = "Covered";
  out["neg"] = r.neg;
  out["unit"] = r.unit;
  out["tail"] = r.tail;
  out["nonreal"] = r.nonreal;
  out["source"] = r.source == CountSource::Predicted ? "Predicted" : "Numeric";
  out["tag"] = r.tag;
  return out;
}

Json prediction_to_json(const std::optional<ZeroReport>& r) {
  if (r) return to_json(*r);
  Json out;
  out["status"] = "NotCovered";
  return out;
}

Json to_json(const RootSet& r) {
  Json roots = Json::array();
  for (const auto& z : r.roots) roots.push_back({z.real(), z.imag()});
  Json out;
  out["roots"] = std::move(roots);
  out["residuals"] = r.residuals;
  out["tol_real"] = r.tolerances.tol_real;
  out["tol_bnd"] = r.tolerances.tol_bnd;
  out["tol_gap"] = r.tolerances.tol_gap;
  return out;
}

}  // namespace hypzeros
