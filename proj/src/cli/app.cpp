#include "greenring/cli/app.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "greenring/adams.hpp"
#include "greenring/cli/output.hpp"
#include "greenring/cli/verify.hpp"
#include "greenring/core.hpp"
#include "greenring/powers.hpp"

namespace greenring::cli {

namespace {

using nlohmann::ordered_json;

constexpr unsigned kDeskScaleExponent = 4;

struct Common {
  unsigned n = 1;
  std::string format = "text";
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--n", c.n, "group exponent: the group is C_{2^n}")
      ->required()
      ->check(CLI::Range(1u, GroupContext::kMaxExponent));
  sub.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void require_index(const char* what, Index value, const GroupContext& ctx) {
  if (value > ctx.order())
    throw std::invalid_argument(std::string(what) + " = " + std::to_string(value) +
                                " exceeds the group order 2^n = " + std::to_string(ctx.order()));
}

GreenElement reduce(const GreenElement& e, Mode mode, const GroupContext& ctx) {
  switch (mode) {
    case Mode::exact: return e;
    case Mode::mod_induced: return part(e, Part::non_induced, ctx);
    case Mode::mod_projective: return strip_projective(ctx, e);
  }
  return e;
}

void emit(std::ostream& out, const Common& c, const OutputRecord& record) {
  if (c.format == "json")
    out << serialize(record) << '\n';
  else
    out << render_text(record.result) << '\n';
}

ordered_json query(const char* command, std::initializer_list<std::pair<const char*, ordered_json>> fields) {
  ordered_json q;
  q["command"] = command;
  for (const auto& [k, v] : fields) q[k] = v;
  return q;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompositions in the Green ring of C_{2^n} over the two-element field", "greenring"};
  app.require_subcommand(1);

  Common tensor_c, ext_c, sym_c, adams_c, series_c, verify_c;
  Index tensor_a = 0, tensor_b = 0, ext_m = 0, sym_m = 0, adams_m = 0, series_m = 0;
  unsigned ext_r = 0, sym_r = 0, adams_r = 1, series_trunc = 0;
  std::string ext_mode = "exact", sym_mode = "exact", series_kind, suite;
  SuiteOptions suite_options;
  bool allow_large = false;
  const auto modes = CLI::IsMember({"exact", "mod_induced", "mod_projective"});

  auto* tensor_cmd = app.add_subcommand("tensor", "decompose V_a (x) V_b");
  add_common(*tensor_cmd, tensor_c);
  tensor_cmd->add_option("a", tensor_a)->required();
  tensor_cmd->add_option("b", tensor_b)->required();

  auto* ext_cmd = app.add_subcommand("ext", "decompose Lambda^r(V_m)");
  add_common(*ext_cmd, ext_c);
  ext_cmd->add_option("--r", ext_r, "degree")->required();
  ext_cmd->add_option("--mode", ext_mode)->check(modes);
  ext_cmd->add_option("m", ext_m)->required();

  auto* sym_cmd = app.add_subcommand("sym", "decompose S^r(V_m)");
  add_common(*sym_cmd, sym_c);
  sym_cmd->add_option("--r", sym_r, "degree")->required();
  sym_cmd->add_option("--mode", sym_mode)->check(modes);
  sym_cmd->add_option("m", sym_m)->required();

  auto* adams_cmd = app.add_subcommand("adams", "Adams operation psi^r(V_m)");
  add_common(*adams_cmd, adams_c);
  adams_cmd->add_option("--r", adams_r, "degree")->required()->check(CLI::PositiveNumber);
  adams_cmd->add_option("m", adams_m)->required();

  auto* series_cmd = app.add_subcommand("series", "coefficients of lambda_t, sigma_t, lambda^Omega_t or psi_t");
  add_common(*series_cmd, series_c);
  series_cmd->add_option("kind", series_kind)->required()->check(CLI::IsMember({"lambda", "sigma", "lambda_omega", "psi"}));
  series_cmd->add_option("m", series_m)->required();
  series_cmd->add_option("--trunc", series_trunc, "highest degree")->required();

  auto* verify_cmd = app.add_subcommand("verify", "compare the recursions with the matrix oracle and identities");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-n", suite_options.max_n, "largest group exponent")
      ->check(CLI::Range(1u, GroupContext::kMaxExponent));
  verify_cmd->add_flag("--allow-large", allow_large, "permit --max-n above 4");
  verify_cmd->add_option("--max-dim", suite_options.max_dim, "largest exterior power dimension");
  verify_cmd->add_option("--sym-narrow-m", suite_options.symmetric.narrow_m, "modules checked to --sym-narrow-r");
  verify_cmd->add_option("--sym-narrow-r", suite_options.symmetric.narrow_r, "symmetric degree for small modules");
  verify_cmd->add_option("--sym-wide-r", suite_options.symmetric.wide_r, "symmetric degree for the other modules");
  verify_cmd->add_option("--theorem-r", suite_options.sym_theorem_r, "largest degree in the symmetric congruence");
  verify_cmd->add_option("--bound-dim", suite_options.summand_bound_dim, "largest dimension in the summand bound");
  verify_cmd->add_option("--format", verify_c.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_storage{"greenring"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*tensor_cmd) {
      const GroupContext ctx(tensor_c.n);
      require_index("a", tensor_a, ctx);
      require_index("b", tensor_b, ctx);
      emit(out, tensor_c,
           {ctx.order(), query("tensor", {{"n", tensor_c.n}, {"a", tensor_a}, {"b", tensor_b}}),
            tensor_indec(tensor_a, tensor_b), Mode::exact});
    } else if (*ext_cmd) {
      const GroupContext ctx(ext_c.n);
      require_index("m", ext_m, ctx);
      const Mode mode = parse_mode(ext_mode);
      const GreenElement value = mode == Mode::mod_induced ? exterior_power_indec_mod_induced(ext_m, ext_r)
                                                           : reduce(exterior_power_indec(ext_m, ext_r), mode, ctx);
      emit(out, ext_c,
           {ctx.order(), query("ext", {{"n", ext_c.n}, {"m", ext_m}, {"r", ext_r}, {"mode", ext_mode}}), value,
            mode});
    } else if (*sym_cmd) {
      const GroupContext ctx(sym_c.n);
      require_index("m", sym_m, ctx);
      const Mode mode = parse_mode(sym_mode);
      emit(out, sym_c,
           {ctx.order(), query("sym", {{"n", sym_c.n}, {"m", sym_m}, {"r", sym_r}, {"mode", sym_mode}}),
            reduce(symmetric_power_indec(sym_m, sym_r), mode, ctx), mode});
    } else if (*adams_cmd) {
      const GroupContext ctx(adams_c.n);
      require_index("m", adams_m, ctx);
      const GreenElement v = adams_m == 0 ? GreenElement{} : from_indec(adams_m);
      emit(out, adams_c,
           {ctx.order(), query("adams", {{"n", adams_c.n}, {"m", adams_m}, {"r", adams_r}}), adams(ctx, adams_r, v),
            Mode::exact});
    } else if (*series_cmd) {
      const GroupContext ctx(series_c.n);
      require_index("m", series_m, ctx);
      const GreenElement v = series_m == 0 ? GreenElement{} : from_indec(series_m);
      GreenSeries s;
      if (series_kind == "lambda") s = exterior_series(v, series_trunc, ctx);
      else if (series_kind == "sigma") s = symmetric_series(v, series_trunc);
      else if (series_kind == "lambda_omega") s = lambda_omega_series(ctx, v, series_trunc);
      else s = psi_series(ctx, v, series_trunc);
      ordered_json records = ordered_json::array();
      for (unsigned k = 0; k <= series_trunc; ++k) {
        const OutputRecord record{ctx.order(),
                                  query("series", {{"n", series_c.n},
                                                   {"kind", series_kind},
                                                   {"m", series_m},
                                                   {"trunc", series_trunc},
                                                   {"degree", k}}),
                                  s[k], Mode::exact};
        if (series_c.format == "json")
          records.push_back(to_json(record));
        else
          out << "t^" << k << ": " << render_text(s[k]) << '\n';
      }
      if (series_c.format == "json") out << records.dump() << '\n';
    } else if (*verify_cmd) {
      if (suite_options.max_n > kDeskScaleExponent && !allow_large)
        throw std::invalid_argument("--max-n above " + std::to_string(kDeskScaleExponent) +
                                    " needs --allow-large");
      const auto reports = run_suite(suite, suite_options);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.ok();
      if (verify_c.format == "json") {
        ordered_json j;
        j["suite"] = suite;
        j["max_n"] = suite_options.max_n;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        j["status"] = ok ? "pass" : "fail";
        out << j.dump() << '\n';
      } else {
        for (const auto& r : reports) {
          out << summary_line(r) << '\n';
          for (const auto& m : r.mismatches)
            out << "  mismatch " << m.inputs << ": recursion " << m.recursion << ", expected " << m.oracle
                << '\n';
        }
        out << "verify " << suite << ": " << (ok ? "PASS" : "FAIL") << '\n';
      }
      return ok ? kSuccess : kMismatch;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kSuccess;
}

}  // namespace greenring::cli
