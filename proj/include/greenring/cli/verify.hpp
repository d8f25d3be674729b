#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "greenring/element.hpp"

namespace greenring::cli {

struct Mismatch {
  std::string inputs;
  std::string recursion;
  std::string oracle;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of one comparison sweep. ok() iff no mismatch was recorded.
struct VerificationReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Mismatch> mismatches;
  double seconds = 0;

  bool ok() const noexcept { return mismatches.empty(); }
  /// Records one case; a mismatch when the two values differ.
  void compare(const std::string& inputs, const GreenElement& recursion, const GreenElement& oracle);
  /// Records one case of a boolean check; `detail` is kept on failure.
  void expect(const std::string& inputs, bool holds, const std::string& detail = "false");
};

nlohmann::ordered_json to_json(const VerificationReport& report);
std::string summary_line(const VerificationReport& report);

/// Largest degree for symmetric-power oracle checks, by module size.
struct SymmetricBudget {
  Index narrow_m = 8;     // modules up to this size ...
  unsigned narrow_r = 12; // ... are checked up to this degree
  unsigned wide_r = 4;    // larger modules up to this degree
};

// Oracle sweeps. Modules range over V_1..V_{2^max_n}, decomposed over C_{2^max_n}.

/// tensor_indec(a, b) against the Kronecker product, all a, b <= 2^max_n.
VerificationReport verify_tensor(unsigned max_n);
/// exterior_power_indec(m, r) against the wedge-power matrix when C(m, r) <= max_dim.
VerificationReport verify_exterior(unsigned max_n, std::size_t max_dim = 20000);
/// symmetric_power_indec(m, r) against the monomial-basis matrix.
VerificationReport verify_symmetric(unsigned max_n, SymmetricBudget budget = {});

// Algebraic checks.

/// Closed Adams recursion against the log-derivative route, odd-degree
/// identity, the psi^6 = psi^2 collapse, dimension and additivity.
VerificationReport verify_adams(unsigned max_n);
/// lambda_t(V_{q+1} - V_{q-1}) = 1 + (V_{q+1} - V_{q-1}) t + t^2 at trunc 2q, 2q <= 2^max_n.
VerificationReport verify_kouwenhoven(unsigned max_n);
/// check_sym_theorem for n <= max_n, 0 <= s <= 2^{n-1}, r <= max_r.
VerificationReport verify_sym_theorem(unsigned max_n, unsigned max_r = 20);
/// The splitting congruences for sigma_t (mod induced) and lambda_t (mod projective).
VerificationReport verify_hs_forms(unsigned max_n);
/// Lambda^r(V_m) = Lambda^{m-r}(V_m) from the unreduced splitting sum, m <= 2^max_n.
VerificationReport verify_duality(unsigned max_n);
/// Restriction is a ring map, restrict(induce(x)) = 2x, and restriction of
/// Lambda^r and S^r matches the product over the two halves (r <= 8).
VerificationReport verify_restriction(unsigned max_n);
/// c(G) is closed under tensor products and Omega.
VerificationReport verify_c_subring(unsigned max_n);
/// Lambda^{2^t u}(V_{2^s j}) and S^{2^t u}(V_{2^s j}) are induced for t < s; for t >= s their
/// non-induced part is a multiple of V_1 of the predicted size. S^2(X) is induced when 4 divides
/// every summand dimension.
VerificationReport verify_induced_powers(unsigned max_n);
/// N^2 <= 2^(dim + summ) for every genuine element of dimension <= max_dim.
VerificationReport verify_summand_bound(unsigned max_dim = 14);

struct SuiteOptions {
  unsigned max_n = 4;
  std::size_t max_dim = 20000;
  SymmetricBudget symmetric;
  unsigned sym_theorem_r = 20;
  unsigned summand_bound_dim = 14;
};

/// Suite names: tensor, ext, sym, adams, identities, all.
std::vector<std::string> suite_names();
/// Runs the named suite; throws std::invalid_argument for unknown names.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace greenring::cli
