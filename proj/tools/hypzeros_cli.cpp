// Command-line front end: classify, trace, roots, predict, scan, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hypzeros/closedform.hpp"
#include "hypzeros/error.hpp"
#include "hypzeros/hyp2f1.hpp"
#include "hypzeros/json_io.hpp"
#include "hypzeros/oracle.hpp"
#include "hypzeros/regions.hpp"
#include "hypzeros/scan.hpp"
#include "hypzeros/sturm.hpp"
#include "hypzeros/verify.hpp"

namespace {

using namespace hypzeros;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamArgs {
  unsigned n = 0;
  std::string b;
  std::string c;
  bool json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-n", n, "polynomial degree")->required();
    cmd->add_option("-b", b, "parameter b, rational literal such as 5/2")
        ->required();
    cmd->add_option("-c", c, "parameter c, rational literal")->required();
  }

  HypParams params() const {
    return HypParams::make(n, Rational::parse(b), Rational::parse(c));
  }
};

Json params_json(const HypParams& p) {
  Json out;
  out["n"] = p.n;
  out["b"] = p.b.str();
  out["c"] = p.c.str();
  return out;
}

std::string census_text(const ZeroReport& z) {
  return "neg=" + std::to_string(z.neg) + " unit=" + std::to_string(z.unit) +
         " tail=" + std::to_string(z.tail) +
         " nonreal=" + std::to_string(z.nonreal);
}

int cmd_classify(const ParamArgs& args, bool with_crosscheck) {
  const HypParams p = args.params();
  if (p.n < 2) {
    throw Error(ErrorKind::DegreeTooSmall, "classification needs n >= 2");
  }
  SequenceTrace trace = build_sequence(build_2f1(p));
  const std::string verdict = trace.classification
                                  ? to_string(*trace.classification)
                                  : "Indeterminate";
  Json out;
  out["params"] = params_json(p);
  std::optional<Rational> witness;
  RegionLabel region;
  if (p.n >= 4) {
    region = main_region(p);
  } else {
    const SmallNVerdict v = smalln_real_simple(p);
    region = v.label;
    witness = v.witness;
  }
  const RegionLabel ortho = orthogonality_region(p);
  out["region"] = to_json(region);
  if (witness) out["witness"] = witness->str();
  out["orthogonality"] = to_json(ortho);
  out["sturm"] = verdict;
  out["c_values"] = Json::array();
  for (const auto& v : trace.c_values()) out["c_values"].push_back(v.str());
  std::optional<CrosscheckReport> report;
  if (with_crosscheck) {
    try {
      report = crosscheck(p);
      out["crosscheck"] = to_json(*report);
    } catch (const Error& e) {
      out["crosscheck"] = Json{{"status", std::string(to_string(e.kind()))},
                               {"message", e.what()}};
    }
  }
  if (args.json) {
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "params: n=" << p.n << " b=" << p.b << " c=" << p.c << '\n'
            << "region: " << region.region << " [" << region.source << "] "
            << region.detail << '\n';
  if (witness) {
    std::cout << "witness: " << *witness
              << (witness->sign() > 0 ? " > 0" : " <= 0") << '\n';
  }
  std::cout << "orthogonality: " << ortho.region << '\n'
            << "sturm: " << verdict << '\n'
            << "c:";
  for (const auto& v : trace.c_values()) std::cout << ' ' << v;
  std::cout << '\n';
  if (with_crosscheck) {
    if (report) {
      std::cout << "crosscheck: " << (report->passed() ? "pass" : "FAIL") << '\n';
      for (const auto& f : report->failures()) std::cout << "  " << f << '\n';
    } else {
      std::cout << "crosscheck: " << out["crosscheck"]["message"].get<std::string>()
                << '\n';
    }
  }
  return kOk;
}

int cmd_trace(const ParamArgs& args, bool normalize) {
  const HypParams p = args.params();
  SequenceTrace trace =
      build_sequence(build_2f1(p), SequenceOptions{.normalize = normalize});
  Json out;
  out["params"] = params_json(p);
  if (!normalize) {
    annotate_2f1_steps(trace, p);
    Json closed = Json::array();
    std::optional<ThetaSequence> thetas;
    try {
      thetas = theta_by_recurrence(p);
    } catch (const Error&) {
    }
    for (std::size_t k = 1; k < p.n; ++k) {
      Json row;
      row["k"] = k;
      try {
        row["c_closed"] = c_closed_form(k, p).str();
      } catch (const Error&) {
        row["c_closed"] = "undefined";
      }
      row["theta"] = thetas ? Json(thetas->at(k).str()) : Json("undefined");
      closed.push_back(std::move(row));
    }
    out["closed_form"] = std::move(closed);
  }
  out["trace"] = to_json(trace);
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_roots(const ParamArgs& args) {
  const HypParams p = args.params();
  const RootSet roots = find_roots(build_2f1(p));
  Json out;
  out["params"] = params_json(p);
  out["roots"] = to_json(roots);
  try {
    out["census"] = to_json(census(roots));
  } catch (const Error& e) {
    out["census"] = Json{{"status", std::string(to_string(e.kind()))},
                         {"message", e.what()}};
  }
  if (args.json) {
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout.precision(17);
  for (const auto& z : roots.roots) {
    std::cout << z.real() << (z.imag() < 0 ? " - " : " + ")
              << std::abs(z.imag()) << "i\n";
  }
  if (out["census"].contains("neg")) {
    std::cout << "census: " << census_text(census(roots)) << '\n';
  } else {
    std::cout << "census: " << out["census"]["message"].get<std::string>()
              << '\n';
  }
  return kOk;
}

int cmd_predict(const ParamArgs& args) {
  const HypParams p = args.params();
  Json out;
  out["params"] = params_json(p);
  std::optional<ZeroReport> prediction;
  bool boundary = false;
  try {
    prediction = predict_counts(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisBoundary) throw;
    boundary = true;
  }
  out["prediction"] =
      boundary ? Json{{"status", "Boundary"}} : prediction_to_json(prediction);
  if (args.json) {
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  if (boundary) {
    std::cout << "Boundary\n";
  } else if (!prediction) {
    std::cout << "NotCovered\n";
  } else {
    std::cout << census_text(*prediction) << " [" << prediction->tag << "]\n";
  }
  return kOk;
}

int cmd_scan(ScanSpec spec, const std::string& out_path) {
  const auto rows = run_scan(spec);
  if (out_path.empty() || out_path == "-") {
    write_csv(std::cout, rows, spec.columns);
    return kOk;
  }
  std::ofstream file(out_path);
  if (!file) throw IoError("cannot open '" + out_path + "' for writing");
  write_csv(file, rows, spec.columns);
  file.close();
  if (!file) throw IoError("failed writing '" + out_path + "'");
  std::size_t disagreements = 0;
  for (const auto& r : rows) disagreements += !r.agree;
  std::cerr << rows.size() << " rows, " << disagreements
            << " disagreements -> " << out_path << '\n';
  return kOk;
}

int cmd_verify(const std::string& level, bool json,
               std::optional<std::size_t> mutate) {
  VerifyOptions opt;
  if (level == "full") {
    opt.level = VerifyLevel::Full;
  } else if (level != "quick") {
    throw Error(ErrorKind::Parse, "level must be quick or full");
  }
  if (mutate) opt.ck_flip = FactorFlip{*mutate};
  const auto results = run_verification(opt);
  bool ok = true;
  Json report = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (json) {
      report.push_back(Json{{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"cases", r.cases},
                            {"failures", r.failures},
                            {"notes", r.notes}});
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name
              << " (" << r.cases << " cases)\n";
    for (const auto& f : r.failures) std::cout << "  failure: " << f << '\n';
  }
  if (json) std::cout << Json{{"passed", ok}, {"checks", report}}.dump(2) << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real zeros of terminating 2F1(-n, b; c; z) polynomials"};
  app.require_subcommand(1);

  ParamArgs classify_args, trace_args, roots_args, predict_args;
  bool with_crosscheck = false;
  bool normalize = false;

  auto* classify = app.add_subcommand("classify", "region and division-sequence verdict");
  classify_args.attach(classify);
  classify->add_flag("--json", classify_args.json, "JSON output");
  classify->add_flag("--crosscheck", with_crosscheck, "compare with closed forms");

  auto* trace = app.add_subcommand("trace", "full division sequence as JSON");
  trace_args.attach(trace);
  trace->add_flag("--normalize", normalize, "scale each step, keep only signs of c_k");

  auto* roots = app.add_subcommand("roots", "numeric zeros and interval census");
  roots_args.attach(roots);
  roots->add_flag("--json", roots_args.json, "JSON output");

  auto* predict = app.add_subcommand("predict", "predicted interval census");
  predict_args.attach(predict);
  predict->add_flag("--json", predict_args.json, "JSON output");

  auto* scan = app.add_subcommand("scan", "grid sweep over (c, b) to CSV");
  unsigned scan_n = 0;
  std::string b_range = "-12:12:1/2", c_range = "-12:12:1/2", margin = "1/20";
  std::string out_path, columns;
  scan->add_option("-n", scan_n, "polynomial degree")->required();
  scan->add_option("--b-range", b_range, "min:max:step")->capture_default_str();
  scan->add_option("--c-range", c_range, "min:max:step")->capture_default_str();
  scan->add_option("--margin", margin, "minimum distance from boundary lines")
      ->capture_default_str();
  scan->add_option("--out", out_path, "CSV path, '-' for stdout");
  scan->add_option("--columns", columns, "comma-separated column subset");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string level = "quick";
  bool verify_json = false;
  std::optional<std::size_t> mutate;
  std::string level_pos;
  verify->add_option("mode", level_pos, "quick or full");
  verify->add_option("--level", level, "quick or full")->capture_default_str();
  verify->add_flag("--json", verify_json, "machine-readable report");
  verify->add_option("--mutate-ck", mutate)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(classify_args, with_crosscheck);
    if (*trace) return cmd_trace(trace_args, normalize);
    if (*roots) return cmd_roots(roots_args);
    if (*predict) return cmd_predict(predict_args);
    if (*scan) {
      ScanSpec spec;
      spec.n = scan_n;
      spec.b_range = RationalRange::parse(b_range);
      spec.c_range = RationalRange::parse(c_range);
      spec.margin = Rational::parse(margin);
      std::stringstream ss(columns);
      for (std::string col; std::getline(ss, col, ',');) {
        if (!col.empty()) spec.columns.push_back(col);
      }
      return cmd_scan(spec, out_path);
    }
    if (*verify) {
      return cmd_verify(level_pos.empty() ? level : level_pos, verify_json,
                        mutate);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
