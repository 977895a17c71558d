// Acceptance gate: every criterion at full size, one PASS/FAIL line each.
// Exit status is 0 only when all criteria pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "hypzeros/closedform.hpp"
#include "hypzeros/verify.hpp"

namespace {

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + HYPZEROS_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void report(bool passed, int id, const std::string& name, const std::string& info) {
  std::cout << (passed ? "[PASS] " : "[FAIL] ") << id << ' ' << name << " ("
            << info << ")" << std::endl;
}

}  // namespace

int main() {
  using namespace hypzeros;
  using clock = std::chrono::steady_clock;
  bool all = true;

  VerifyOptions opt;
  opt.level = VerifyLevel::Full;
  using Check = CheckResult (*)(const VerifyOptions&);
  const Check checks[] = {check_real_simple_regions, check_small_degree,
                          check_closed_forms,        check_theta,
                          check_pfaff,               check_jacobi,
                          check_censuses,            check_degenerate_branch};
  for (Check check : checks) {
    const auto start = clock::now();
    const CheckResult r = check(opt);
    const double secs =
        std::chrono::duration<double>(clock::now() - start).count();
    bool passed = r.passed;
    std::string info = std::to_string(r.cases) + " cases, " +
                       std::to_string(r.failures.size()) + " mismatches, " +
                       std::to_string(secs).substr(0, 5) + " s";
    if (r.id == 1 && secs >= 120.0) {
      passed = false;
      info += ", over the 2 minute budget";
    }
    report(passed, r.id, r.name, info);
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    for (const auto& n : r.notes) std::cout << "    note: " << n << '\n';
    all = all && passed;
  }

  // Mutation sensitivity: every single-factor sign flip must fail verify.
  const int clean = run_cli("verify quick");
  int caught = 0;
  std::string escaped;
  for (std::size_t i = 0; i < kCkFactorCount; ++i) {
    if (run_cli("verify quick --mutate-ck " + std::to_string(i)) == 1) {
      ++caught;
    } else {
      escaped += " " + std::to_string(i);
    }
  }
  const bool mutation_ok = clean == 0 && caught == int(kCkFactorCount);
  report(mutation_ok, 9, "single c_k factor flips make verify exit 1",
         std::to_string(caught) + "/" + std::to_string(kCkFactorCount) +
             " mutants caught, clean exit " + std::to_string(clean) +
             (escaped.empty() ? "" : ", escaped:" + escaped));
  all = all && mutation_ok;

  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED")
            << std::endl;
  return all ? 0 : 1;
}
