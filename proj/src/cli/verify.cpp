#include "greenring/cli/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "greenring/adams.hpp"
#include "greenring/core.hpp"
#include "greenring/oracle.hpp"
#include "greenring/powers.hpp"
#include "greenring/series.hpp"

namespace greenring::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string args(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

// Times `body` and converts escaping exceptions into a mismatch.
VerificationReport run(const std::string& suite, const std::function<void(VerificationReport&)>& body) {
  VerificationReport report;
  report.suite = suite;
  const auto start = Clock::now();
  try {
    body(report);
  } catch (const std::exception& e) {
    report.mismatches.push_back({"suite aborted", e.what(), "-"});
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

// Per-case guard: an exception in one case is recorded and the sweep goes on.
template <typename Body>
void guarded(VerificationReport& report, const std::string& inputs, Body body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++report.cases;
    report.mismatches.push_back({inputs, std::string("exception: ") + e.what(), "-"});
  }
}

Index order_of(unsigned n) { return Index{1} << n; }

GreenElement indec_or_zero(Index m) { return m == 0 ? GreenElement{} : from_indec(m); }

GreenElement sym_or_trivial(Index m, unsigned r) {
  if (m == 0) return r == 0 ? from_indec(1) : GreenElement{};
  return symmetric_power_indec(m, r);
}

unsigned two_adic_valuation(Index x) {
  unsigned v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

void for_each_partition(unsigned total, unsigned largest, std::vector<Index>& parts,
                        const std::function<void(const std::vector<Index>&)>& visit) {
  if (total == 0) {
    visit(parts);
    return;
  }
  for (unsigned p = std::min(total, largest); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(total - p, p, parts, visit);
    parts.pop_back();
  }
}

GreenElement element_of(const std::vector<Index>& parts) {
  std::vector<GreenElement::Term> terms;
  for (Index p : parts) terms.emplace_back(p, 1);
  return GreenElement::from_terms(std::move(terms));
}

}  // namespace

void VerificationReport::compare(const std::string& inputs, const GreenElement& recursion,
                                 const GreenElement& oracle) {
  ++cases;
  if (recursion != oracle) mismatches.push_back({inputs, to_string(recursion), to_string(oracle)});
}

void VerificationReport::expect(const std::string& inputs, bool holds, const std::string& detail) {
  ++cases;
  if (!holds) mismatches.push_back({inputs, detail, "true"});
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["cases"] = report.cases;
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : report.mismatches)
    j["mismatches"].push_back({{"inputs", m.inputs}, {"recursion", m.recursion}, {"oracle", m.oracle}});
  j["seconds"] = report.seconds;
  j["status"] = report.ok() ? "pass" : "fail";
  return j;
}

std::string summary_line(const VerificationReport& report) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", report.seconds);
  return report.suite + ": " + std::to_string(report.cases) + " cases, " +
         std::to_string(report.mismatches.size()) + " mismatches, " + buf + " s";
}

VerificationReport verify_tensor(unsigned max_n) {
  return run("tensor", [&](VerificationReport& rep) {
    const GroupContext ctx(max_n);
    const Index top = ctx.order();
    for (Index a = 1; a <= top; ++a)
      for (Index b = 1; b <= top; ++b) {
        const auto in = args({{"a", a}, {"b", b}});
        guarded(rep, in, [&] {
          rep.compare(in, tensor_indec(a, b), decompose(ctx, kronecker(rep_indec(a), rep_indec(b))));
        });
      }
  });
}

VerificationReport verify_exterior(unsigned max_n, std::size_t max_dim) {
  return run("ext", [&](VerificationReport& rep) {
    const GroupContext ctx(max_n);
    for (Index m = 1; m <= ctx.order(); ++m)
      for (unsigned r = 0; r <= m; ++r) {
        if (basis_size(BasisKind::wedge, m, r) > max_dim) continue;
        const auto in = args({{"m", m}, {"r", r}});
        guarded(rep, in, [&] {
          rep.compare(in, exterior_power_indec(m, r), decompose(ctx, wedge_power(rep_indec(m), r)));
        });
      }
  });
}

VerificationReport verify_symmetric(unsigned max_n, SymmetricBudget budget) {
  return run("sym", [&](VerificationReport& rep) {
    const GroupContext ctx(max_n);
    for (Index m = 1; m <= ctx.order(); ++m) {
      const unsigned top = m <= budget.narrow_m ? budget.narrow_r : budget.wide_r;
      for (unsigned r = 0; r <= top; ++r) {
        const auto in = args({{"m", m}, {"r", r}});
        guarded(rep, in, [&] {
          rep.compare(in, symmetric_power_indec(m, r), decompose(ctx, sym_power(rep_indec(m), r)));
        });
      }
    }
  });
}

VerificationReport verify_adams(unsigned max_n) {
  return run("adams", [&](VerificationReport& rep) {
    const GroupContext ctx(max_n);
    for (Index j = 1; j <= ctx.order(); ++j) {
      const GreenElement v = from_indec(j);
      for (unsigned r = 1; r <= 8; ++r) {
        const auto in = args({{"j", j}, {"r", r}});
        guarded(rep, in, [&] {
          const GreenElement closed = adams(ctx, r, v);
          rep.compare(in, closed, adams_via_series(ctx, r, v));
          rep.expect(in + " dim", dim(closed) == BigInt(j), to_string(closed));
          if (r % 2 == 1) rep.compare(in + " odd", adams_via_series(ctx, r, v), v);
        });
      }
      if (j <= 8) {
        const auto in = args({{"j", j}});
        guarded(rep, in, [&] {
          rep.compare(in + " psi6=psi2", adams_via_series(ctx, 6, v), adams_via_series(ctx, 2, v));
        });
      }
    }
    if (ctx.order() >= 3) {
      const GreenElement a = from_indec(3), b = from_indec(2);
      for (unsigned r = 1; r <= 8; ++r) {
        const auto in = args({{"r", r}}) + " e=V2+V3";
        guarded(rep, in, [&] {
          rep.compare(in, adams_via_series(ctx, r, a + b), adams_via_series(ctx, r, a) + adams_via_series(ctx, r, b));
        });
      }
    }
  });
}

VerificationReport verify_kouwenhoven(unsigned max_n) {
  return run("kouwenhoven", [&](VerificationReport& rep) {
    for (unsigned q = 2; 2 * q <= order_of(max_n); q *= 2) {
      const auto in = args({{"q", q}, {"trunc", 2 * q}});
      guarded(rep, in, [&] { rep.expect(in, check_kouwenhoven(q, 2 * q)); });
    }
  });
}

VerificationReport verify_sym_theorem(unsigned max_n, unsigned max_r) {
  return run("sym_theorem", [&](VerificationReport& rep) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const GroupContext ctx(n);
      for (Index s = 0; s <= ctx.order() / 2; ++s)
        for (unsigned r = 0; r <= max_r; ++r) {
          const auto in = args({{"n", n}, {"s", s}, {"r", r}});
          guarded(rep, in, [&] { rep.expect(in, check_sym_theorem(ctx, s, r)); });
        }
    }
  });
}

VerificationReport verify_hs_forms(unsigned max_n) {
  return run("hs_forms", [&](VerificationReport& rep) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const GroupContext ctx(n);
      const Index q = ctx.order();
      const Index half = q / 2;
      GreenSeries periodic = GreenSeries::unit(q);
      periodic[q] = -from_indec(1);
      const GreenSeries periodic_inverse = inverse(periodic);
      for (Index s = 0; s <= half; ++s) {
        const auto in = args({{"n", n}, {"s", s}});
        guarded(rep, in, [&] {
          const GreenSeries sigma = symmetric_series(from_indec(half + s), q);
          const GreenSeries sigma_rhs =
              mul(lambda_omega_series(ctx, indec_or_zero(half - s), q), periodic_inverse);
          const GreenSeries lambda = exterior_series(from_indec(half + s), q, ctx);
          const GreenSeries lambda_rhs =
              mul(substitute_t_squared(lambda_omega_series(ctx, indec_or_zero(s), q), q),
                  lambda_omega_series(ctx, indec_or_zero(half - s), q));
          for (unsigned k = 0; k <= q; ++k) {
            const std::string deg = " degree=" + std::to_string(k);
            ++rep.cases;
            if (!equal_mod(sigma[k], sigma_rhs[k], Ideal::induced, ctx))
              rep.mismatches.push_back({in + deg + " sigma mod induced", to_string(sigma[k]), to_string(sigma_rhs[k])});
            ++rep.cases;
            if (!equal_mod(lambda[k], lambda_rhs[k], Ideal::projective, ctx))
              rep.mismatches.push_back({in + deg + " lambda mod projective", to_string(lambda[k]), to_string(lambda_rhs[k])});
          }
        });
      }
    }
  });
}

VerificationReport verify_duality(unsigned max_n) {
  return run("duality", [&](VerificationReport& rep) {
    for (Index m = 0; m <= order_of(max_n); ++m)
      for (unsigned r = 0; r <= m; ++r) {
        const auto in = args({{"m", m}, {"r", r}});
        guarded(rep, in, [&] {
          rep.compare(in, exterior_power_indec_unreduced(m, r), exterior_power_indec_unreduced(m, m - r));
        });
      }
  });
}

VerificationReport verify_restriction(unsigned max_n) {
  return run("restriction", [&](VerificationReport& rep) {
    const Index top = order_of(max_n);
    for (Index a = 1; a <= top; ++a)
      for (Index b = 1; b <= top; ++b) {
        const auto in = args({{"a", a}, {"b", b}}) + " ring map";
        guarded(rep, in, [&] {
          rep.compare(in, restriction(tensor_indec(a, b)),
                      tensor(restriction(from_indec(a)), restriction(from_indec(b))));
        });
      }
    for (Index x = 1; 2 * x <= top; ++x) {
      const auto in = args({{"x", x}}) + " restrict(induce)";
      guarded(rep, in, [&] { rep.compare(in, restriction(induction(from_indec(x))), from_indec(x) * BigInt(2)); });
    }
    for (Index m = 1; m <= top; ++m) {
      const Index up = (m + 1) / 2, down = m / 2;
      for (unsigned r = 0; r <= 8; ++r) {
        const auto in = args({{"m", m}, {"r", r}});
        guarded(rep, in, [&] {
          GreenElement ext_rhs, sym_rhs;
          for (unsigned i = 0; i <= r; ++i) {
            ext_rhs += tensor(exterior_power_indec(up, i), exterior_power_indec(down, r - i));
            sym_rhs += tensor(sym_or_trivial(up, i), sym_or_trivial(down, r - i));
          }
          rep.compare(in + " ext", restriction(exterior_power_indec(m, r)), ext_rhs);
          rep.compare(in + " sym", restriction(symmetric_power_indec(m, r)), sym_rhs);
        });
      }
    }
  });
}

VerificationReport verify_c_subring(unsigned max_n) {
  return run("c_subring", [&](VerificationReport& rep) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const GroupContext ctx(n);
      for (Index a = 1; a <= ctx.order(); ++a) {
        if (a % 4 == 2) continue;
        const GreenElement twisted = omega(ctx, from_indec(a));
        rep.expect(args({{"n", n}, {"a", a}}) + " omega", in_c_subring(twisted), to_string(twisted));
        for (Index b = a; b <= ctx.order(); ++b) {
          if (b % 4 == 2) continue;
          const GreenElement product = tensor_indec(a, b);
          rep.expect(args({{"n", n}, {"a", a}, {"b", b}}), in_c_subring(product), to_string(product));
        }
      }
    }
  });
}

VerificationReport verify_induced_powers(unsigned max_n) {
  return run("induced_powers", [&](VerificationReport& rep) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const GroupContext ctx(n);
      const Index q = ctx.order();
      for (Index m = 2; m <= q; m += 2) {
        const unsigned s = two_adic_valuation(m);
        const Index j = m >> s;
        for (unsigned r = 1; r < q; ++r) {
          const unsigned t = two_adic_valuation(r);
          const Index u = r >> t;
          const auto in = args({{"n", n}, {"m", m}, {"r", r}});
          guarded(rep, in, [&] {
            const GreenElement ext = part(exterior_power_indec(m, r), Part::non_induced, ctx);
            const GreenElement sym = part(symmetric_power_indec(m, r), Part::non_induced, ctx);
            if (t < s) {
              rep.compare(in + " ext induced", ext, {});
              rep.compare(in + " sym induced", sym, {});
            } else {
              const unsigned reduced = (1u << (t - s)) * u;
              const BigInt ext_count =
                  summand_count(part(exterior_power_indec(j, reduced), Part::non_induced, ctx));
              rep.compare(in + " ext trivial part", ext, from_indec(1) * ext_count);
              // The symmetric count passes through S^r(V_m) ~ Lambda^r(V_{2^n - m}), valid for m > 2^{n-1}.
              if (2 * m > q) {
                const BigInt sym_count = summand_count(
                    part(exterior_power_indec((q >> s) - j, reduced), Part::non_induced, ctx));
                rep.compare(in + " sym trivial part", sym, from_indec(1) * sym_count);
              }
            }
          });
        }
      }
    }
    // S^2(X) is induced when every summand of X has dimension divisible by 4.
    std::vector<Index> parts;
    const unsigned top = order_of(max_n);
    for (unsigned total = 4; total <= top; total += 4)
      for_each_partition(total / 4, top / 4, parts, [&](const std::vector<Index>& quarters) {
        std::vector<Index> dims;
        for (Index x : quarters) dims.push_back(4 * x);
        const GreenElement x = element_of(dims);
        const GreenElement odd = part(symmetric_power(x, 2), Part::non_induced, GroupContext(max_n));
        rep.compare("S^2(" + to_string(x) + ")", odd, {});
      });
  });
}

VerificationReport verify_summand_bound(unsigned max_dim) {
  return run("summand_bound", [&](VerificationReport& rep) {
    std::vector<Index> parts;
    for (unsigned total = 1; total <= max_dim; ++total)
      for_each_partition(total, total, parts, [&](const std::vector<Index>& p) {
        const GreenElement e = element_of(p);
        guarded(rep, to_string(e), [&] {
          rep.expect(to_string(e), summand_bound_holds(e),
                     "N = " + non_induced_summands_of_exterior_algebra(e).str());
        });
      });
  });
}

std::vector<std::string> suite_names() { return {"tensor", "ext", "sym", "adams", "identities", "all"}; }

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const bool all = name == "all";
  if (all || name == "tensor") out.push_back(verify_tensor(o.max_n));
  if (all || name == "ext") out.push_back(verify_exterior(o.max_n, o.max_dim));
  if (all || name == "sym") out.push_back(verify_symmetric(o.max_n, o.symmetric));
  if (all || name == "adams") out.push_back(verify_adams(o.max_n));
  if (all || name == "identities") {
    out.push_back(verify_kouwenhoven(o.max_n));
    out.push_back(verify_hs_forms(o.max_n));
    out.push_back(verify_sym_theorem(o.max_n, o.sym_theorem_r));
    out.push_back(verify_duality(o.max_n));
    out.push_back(verify_restriction(o.max_n));
    out.push_back(verify_c_subring(o.max_n));
    out.push_back(verify_induced_powers(o.max_n));
    out.push_back(verify_summand_bound(o.summand_bound_dim));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace greenring::cli
