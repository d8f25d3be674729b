// Acceptance criteria: each check runs at its pinned budget and prints one
// PASS/FAIL line. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "greenring/adams.hpp"
#include "greenring/cli/app.hpp"
#include "greenring/cli/verify.hpp"
#include "greenring/powers.hpp"
#include "greenring/series.hpp"

using namespace greenring;
using namespace greenring::cli;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_reports(const std::vector<VerificationReport>& reports) {
  Outcome o{true, ""};
  std::size_t cases = 0, bad = 0;
  for (const auto& r : reports) {
    cases += r.cases;
    bad += r.mismatches.size();
    if (!r.ok()) {
      o.ok = false;
      o.detail += " [" + r.suite + ": " + r.mismatches.front().inputs + "]";
    }
  }
  o.detail = std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches" + o.detail;
  return o;
}

Outcome cli_output(const std::vector<std::string>& args, const std::string& expected) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code == kSuccess && out.str() == expected, "output " + out.str().substr(0, out.str().size() - 1)};
}

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = seconds < budget_seconds;
  const bool pass = o.ok && in_budget;
  if (!pass) ++failures;
  std::printf("criterion %2d %-34s %s  %.3f s (budget %g s)%s  %s\n", id, name, pass ? "PASS" : "FAIL", seconds,
              budget_seconds, in_budget ? "" : " over budget", o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "tensor worked example", 0.010, [] {
    return cli_output({"tensor", "--n", "4", "9", "13"}, "V5 + 2*V8 + 6*V16\n");
  });

  criterion(2, "exterior worked example", 0.010, [] {
    return cli_output({"ext", "--n", "4", "--r", "6", "13"}, "V1 + 2*V4 + V5 + 2*V8 + V9 + V13 + 104*V16\n");
  });

  criterion(3, "34-digit multiplicity", 5.0, [] {
    const BigInt m = exterior_power_indec(147, 57).multiplicity(128);
    return Outcome{m == BigInt("8197519886357582844587268803532720"), "mult " + m.str()};
  });

  criterion(4, "oracle sweep: tensor", 30.0, [] { return from_reports({verify_tensor(4)}); });

  criterion(5, "oracle sweep: exterior", 300.0, [] { return from_reports({verify_exterior(4, 20000)}); });

  criterion(6, "oracle sweep: symmetric", 300.0, [] {
    return from_reports({verify_symmetric(4, SymmetricBudget{8, 12, 4})});
  });

  criterion(7, "symmetric congruence", 30.0, [] { return from_reports({verify_sym_theorem(4, 20)}); });

  criterion(8, "Kouwenhoven identity", 10.0, [] {
    Outcome o{true, "q = 2, 4, 8"};
    for (unsigned q : {2u, 4u, 8u}) o.ok = o.ok && check_kouwenhoven(q, 2 * q);
    return o;
  });

  criterion(9, "Adams consistency", 30.0, [] { return from_reports({verify_adams(4)}); });

  criterion(10, "summand bound", 120.0, [] { return from_reports({verify_summand_bound(14)}); });

  criterion(11, "property suites", 120.0, [] {
    return from_reports({verify_duality(4), verify_restriction(4), verify_c_subring(4), verify_induced_powers(4),
                         verify_hs_forms(4)});
  });

  std::printf("acceptance: %s (%d failing)\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
