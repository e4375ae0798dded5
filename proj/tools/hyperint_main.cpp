/**
 * @file hyperint_main.cpp
 * @brief Command-line front end: closed-form integral evaluation with
 *        optional oracle verification, identity residual checks and sweeps,
 *        and distribution queries (pdf/cdf/quantile/moment/meanvar/sample/
 *        curve).
 *
 * Output contract: human mode prints key=value lines with 10 significant
 * digits; --json prints one JSON object per line with 17 significant digits
 * and a stable key set per subcommand (absent optionals are null); --csv
 * prints a header row then data rows.  Identical invocations (same seed)
 * produce byte-identical output; the elapsed-time field only appears under
 * --timing so that default output stays reproducible.
 *
 * Exit codes: 0 success; 1 internal/convergence failure; 2 usage or parse
 * error; 3 domain error (invalid parameters, unsupported point, nonexistent
 * moment); 4 verification tolerance exceeded.
 */
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperint/distributions.hpp"
#include "hyperint/errors.hpp"
#include "hyperint/identities.hpp"
#include "hyperint/integrals.hpp"
#include "hyperint/oracle.hpp"
#include "hyperint/series.hpp"

namespace {

using namespace hyperint;

/// Usage problems detected after flag parsing (wrong flag combination for a
/// family, etc.); mapped to exit code 2 like parser errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputMode { kHuman, kJson, kCsv };

std::string fmt_num(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

/// One typed output field; rendering differs per output mode.
struct Field {
  enum Tag { kNum, kInt, kBool, kStr, kNull } tag;
  std::string key;
  double num = 0.0;
  long long integer = 0;
  bool flag = false;
  std::string text;
};

Field fnum(std::string key, double v) { return {Field::kNum, std::move(key), v, 0, false, {}}; }
Field fint(std::string key, long long v) { return {Field::kInt, std::move(key), 0.0, v, false, {}}; }
Field fbool(std::string key, bool v) { return {Field::kBool, std::move(key), 0.0, 0, v, {}}; }
Field fstr(std::string key, std::string v) { return {Field::kStr, std::move(key), 0.0, 0, false, std::move(v)}; }
Field fnull(std::string key) { return {Field::kNull, std::move(key), 0.0, 0, false, {}}; }

/// Serializes rows of fields in the selected mode; CSV emits its header
/// before the first row only.
class Emitter {
 public:
  explicit Emitter(OutputMode mode) : mode_(mode) {}

  void row(const std::vector<Field>& fields) {
    switch (mode_) {
      case OutputMode::kHuman:
        for (const Field& f : fields) {
          if (f.tag == Field::kNull) continue;
          std::cout << f.key << '=' << render(f, 10) << '\n';
        }
        break;
      case OutputMode::kJson: {
        std::cout << '{';
        bool first = true;
        for (const Field& f : fields) {
          if (!first) std::cout << ',';
          first = false;
          std::cout << '"' << f.key << "\":" << render(f, 17);
        }
        std::cout << "}\n";
        break;
      }
      case OutputMode::kCsv: {
        if (!header_done_) {
          for (std::size_t i = 0; i < fields.size(); ++i)
            std::cout << (i ? "," : "") << fields[i].key;
          std::cout << '\n';
          header_done_ = true;
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
          std::cout << (i ? "," : "");
          if (fields[i].tag != Field::kNull) std::cout << render_csv(fields[i]);
        }
        std::cout << '\n';
        break;
      }
    }
  }

 private:
  std::string render(const Field& f, int digits) const {
    switch (f.tag) {
      case Field::kNum:
        // JSON has no representation for non-finite numbers.
        if (mode_ == OutputMode::kJson && !std::isfinite(f.num)) return "null";
        return fmt_num(f.num, digits);
      case Field::kInt: return std::to_string(f.integer);
      case Field::kBool: return f.flag ? "true" : "false";
      case Field::kStr:
        return mode_ == OutputMode::kJson ? '"' + f.text + '"' : f.text;
      case Field::kNull: return "null";
    }
    return {};
  }

  std::string render_csv(const Field& f) const {
    if (f.tag == Field::kNum) return fmt_num(f.num, 17);
    if (f.tag == Field::kInt) return std::to_string(f.integer);
    if (f.tag == Field::kBool) return f.flag ? "true" : "false";
    return f.text;
  }

  OutputMode mode_;
  bool header_done_ = false;
};

/// Shared output/verification flags; registered on every leaf subcommand.
struct CommonFlags {
  bool json = false;
  bool csv = false;
  bool timing = false;

  OutputMode mode() const {
    return json ? OutputMode::kJson : csv ? OutputMode::kCsv : OutputMode::kHuman;
  }
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
  auto* j = cmd->add_flag("--json", flags.json,
                          "Emit line-delimited JSON (17 significant digits)");
  auto* c = cmd->add_flag("--csv", flags.csv,
                          "Emit CSV with a header row (17 significant digits)");
  cmd->add_flag("--timing", flags.timing,
                "Append an elapsed_ms field (breaks byte-reproducibility)");
  j->excludes(c);
  c->excludes(j);
}

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

IntegralKind kind_from_string(const std::string& s) {
  if (s == "exp") return IntegralKind::Exp;
  if (s == "cosh") return IntegralKind::Cosh;
  if (s == "sinh") return IntegralKind::Sinh;
  if (s == "cos") return IntegralKind::Cos;
  if (s == "sin") return IntegralKind::Sin;
  throw UsageError("unknown kind: " + s);
}

/// Integrand x^alpha * kernel(eta x^beta) assembled from elementary
/// functions only, for quadrature verification.
std::function<double(double)> make_integrand(const IntegralSpec& spec) {
  return [spec](double x) {
    const double w = spec.eta * std::pow(x, spec.beta);
    double kernel = 0.0;
    switch (spec.kind) {
      case IntegralKind::Exp: kernel = std::exp(w); break;
      case IntegralKind::Cosh: kernel = std::cosh(w); break;
      case IntegralKind::Sinh: kernel = std::sinh(w); break;
      case IntegralKind::Cos: kernel = std::cos(w); break;
      case IntegralKind::Sin: kernel = std::sin(w); break;
    }
    return std::pow(x, spec.alpha) * kernel;
  };
}

struct SeriesTotals {
  long long terms = 0;
  double err = 0.0;
};

SeriesTotals totals(const std::vector<SeriesValue>& report) {
  SeriesTotals t;
  for (const SeriesValue& s : report) {
    t.terms += static_cast<long long>(s.terms_used);
    t.err += s.trunc_err_est;
    if (!s.converged)
      throw NoConvergence("series did not converge; raise HYPERINT_MAX_TERMS");
  }
  return t;
}

// ---------------------------------------------------------------------------
// integral subcommands
// ---------------------------------------------------------------------------

struct IntegralArgs {
  std::string kind;
  double alpha = 0.0, eta = 0.0, beta = 0.0;
  double x = 0.0, a = 0.0, b = 0.0;
  bool verify = false;
  double tol = 1e-6;
  CommonFlags out;
};

int run_integral_eval(const IntegralArgs& args, const SeriesConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  IntegralSpec spec{kind_from_string(args.kind), args.alpha, args.eta, args.beta};
  spec.validate();
  const AntiderivativeValue av = antiderivative(spec, args.x, cfg);
  const SeriesTotals tot = totals(av.series_report);

  std::optional<double> oracle_value;
  if (args.verify) {
    // F is normalized so F(0+) = 0, hence F(x) equals the definite integral
    // from 0 to x and can be checked by quadrature.
    oracle_value = args.x == 0.0
                       ? 0.0
                       : oracle::integrate(make_integrand(spec), 0.0, args.x).value;
  }

  std::vector<Field> fields{
      fstr("command", "integral.eval"),
      fstr("kind", args.kind),
      fnum("alpha", args.alpha),
      fnum("eta", args.eta),
      fnum("beta", args.beta),
      fnum("x", args.x),
      fnum("value", av.value),
      fbool("elementary_branch", av.elementary_branch),
      fint("terms_used", tot.terms),
      fnum("trunc_err_est", tot.err),
      oracle_value ? fnum("oracle_value", *oracle_value) : fnull("oracle_value"),
      oracle_value ? fnum("discrepancy", std::fabs(av.value - *oracle_value))
                   : fnull("discrepancy"),
  };
  if (args.out.timing) fields.push_back(fnum("elapsed_ms", elapsed_ms_since(t0)));
  Emitter(args.out.mode()).row(fields);
  if (oracle_value && std::fabs(av.value - *oracle_value) > args.tol) return 4;
  return 0;
}

int run_integral_definite(const IntegralArgs& args, const SeriesConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  IntegralSpec spec{kind_from_string(args.kind), args.alpha, args.eta, args.beta};
  spec.validate();
  if (args.a > args.b) throw DomainError("integral definite: need a <= b");
  // Same arithmetic as definite_integral, kept explicit here so the report
  // can carry the endpoint series diagnostics.
  const AntiderivativeValue upper = antiderivative(spec, args.b, cfg);
  const AntiderivativeValue lower = antiderivative(spec, args.a, cfg);
  const double value = upper.value - lower.value;
  SeriesTotals tot = totals(upper.series_report);
  const SeriesTotals tot_lower = totals(lower.series_report);
  tot.terms += tot_lower.terms;
  tot.err += tot_lower.err;

  std::optional<double> oracle_value;
  if (args.verify) {
    oracle_value = args.a == args.b
                       ? 0.0
                       : oracle::integrate(make_integrand(spec), args.a, args.b).value;
  }

  std::vector<Field> fields{
      fstr("command", "integral.definite"),
      fstr("kind", args.kind),
      fnum("alpha", args.alpha),
      fnum("eta", args.eta),
      fnum("beta", args.beta),
      fnum("a", args.a),
      fnum("b", args.b),
      fnum("value", value),
      fint("terms_used", tot.terms),
      fnum("trunc_err_est", tot.err),
      oracle_value ? fnum("oracle_value", *oracle_value) : fnull("oracle_value"),
      oracle_value ? fnum("discrepancy", std::fabs(value - *oracle_value))
                   : fnull("discrepancy"),
  };
  if (args.out.timing) fields.push_back(fnum("elapsed_ms", elapsed_ms_since(t0)));
  Emitter(args.out.mode()).row(fields);
  if (oracle_value && std::fabs(value - *oracle_value) > args.tol) return 4;
  return 0;
}

int run_integral_halfline(const IntegralArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const double value = half_line_integral(args.alpha, args.eta, args.beta);

  std::optional<double> oracle_value;
  if (args.verify) {
    // The half-line integrand is x^alpha e^{-eta x^beta}; make_integrand's
    // exp kernel uses +eta, so negate it here.
    IntegralSpec spec{IntegralKind::Exp, args.alpha, -args.eta, args.beta};
    oracle_value = oracle::integrate_half_line(make_integrand(spec)).value;
  }

  std::vector<Field> fields{
      fstr("command", "integral.halfline"),
      fnum("alpha", args.alpha),
      fnum("eta", args.eta),
      fnum("beta", args.beta),
      fnum("value", value),
      oracle_value ? fnum("oracle_value", *oracle_value) : fnull("oracle_value"),
      oracle_value ? fnum("discrepancy", std::fabs(value - *oracle_value))
                   : fnull("discrepancy"),
  };
  if (args.out.timing) fields.push_back(fnum("elapsed_ms", elapsed_ms_since(t0)));
  Emitter(args.out.mode()).row(fields);
  if (oracle_value && std::fabs(value - *oracle_value) > args.tol) return 4;
  return 0;
}

// ---------------------------------------------------------------------------
// identity subcommands
// ---------------------------------------------------------------------------

struct IdentityArgs {
  std::string id;
  double alpha = 0.0, beta = 0.0, eta = 0.0, x = 0.0;
  unsigned long long j = 0;
  bool has_eta = false, has_x = false, has_j = false;
  unsigned long long samples = 0;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  CommonFlags out;
};

bool is_lemma_id(IdentityId id) {
  return id == IdentityId::L1a || id == IdentityId::L1b || id == IdentityId::L1c;
}

int run_identity_check(const IdentityArgs& args, const SeriesConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityId id = identity_from_name(args.id);
  IdentityResidual res;
  if (is_lemma_id(id)) {
    if (!args.has_j)
      throw UsageError("identity check: --j is required for L1a/L1b/L1c");
    if (args.has_eta || args.has_x)
      throw UsageError("identity check: --eta/--x do not apply to L1a/L1b/L1c");
    res = check_lemma1(id, args.alpha, args.beta, args.j);
  } else {
    if (!args.has_eta || !args.has_x)
      throw UsageError("identity check: --eta and --x are required for T2..T7");
    if (args.has_j)
      throw UsageError("identity check: --j does not apply to T2..T7");
    res = check_identity(id, args.alpha, args.beta, args.eta, args.x, cfg);
  }

  std::vector<Field> fields{
      fstr("command", "identity.check"),
      fstr("id", args.id),
      fnum("alpha", args.alpha),
      fnum("beta", args.beta),
      args.has_eta ? fnum("eta", args.eta) : fnull("eta"),
      args.has_x ? fnum("x", args.x) : fnull("x"),
      args.has_j ? fint("j", static_cast<long long>(args.j)) : fnull("j"),
      fnum("lhs", res.lhs),
      fnum("rhs", res.rhs),
      fnum("residual", res.residual),
      fnum("rel_residual", res.rel_residual),
  };
  if (args.out.timing) fields.push_back(fnum("elapsed_ms", elapsed_ms_since(t0)));
  Emitter(args.out.mode()).row(fields);
  return res.rel_residual > args.tol ? 4 : 0;
}

int run_identity_sweep(const IdentityArgs& args, const SeriesConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityId id = identity_from_name(args.id);
  const SweepResult res = sweep_identity(id, args.samples, args.seed, cfg);

  std::vector<Field> fields{
      fstr("command", "identity.sweep"),
      fstr("id", args.id),
      fint("samples", static_cast<long long>(args.samples)),
      fint("seed", static_cast<long long>(args.seed)),
      fnum("max_rel_residual", res.max_rel_residual),
      fnum("worst_alpha", res.worst_alpha),
      fnum("worst_beta", res.worst_beta),
      fnum("worst_eta", res.worst_eta),
      fnum("worst_x", res.worst_x),
  };
  if (args.out.timing) fields.push_back(fnum("elapsed_ms", elapsed_ms_since(t0)));
  Emitter(args.out.mode()).row(fields);
  return res.max_rel_residual > args.tol ? 4 : 0;
}

// ---------------------------------------------------------------------------
// dist subcommands
// ---------------------------------------------------------------------------

struct DistArgs {
  std::string family;
  double alpha = 0.0, eta = 0.0, beta = 0.0, theta = 0.0, sigma = 0.0;
  bool has_alpha = false, has_eta = false, has_beta = false, has_theta = false,
       has_sigma = false;
  double x = 0.0, p = 0.0, from = 0.0, to = 0.0;
  unsigned long long n = 0;
  std::uint64_t seed = 0;
  unsigned long long points = 0;
  CommonFlags out;
};

void require_params(const DistArgs& a, bool alpha, bool eta, bool beta,
                    bool theta, bool sigma) {
  auto check = [&](bool want, bool have, const char* name) {
    if (want && !have)
      throw UsageError("dist: family '" + a.family + "' requires --" + name);
    if (!want && have)
      throw UsageError("dist: family '" + a.family + "' does not take --" +
                       name);
  };
  check(alpha, a.has_alpha, "alpha");
  check(eta, a.has_eta, "eta");
  check(beta, a.has_beta, "beta");
  check(theta, a.has_theta, "theta");
  check(sigma, a.has_sigma, "sigma");
}

DistributionParams build_params(const DistArgs& a) {
  if (a.family == "gengamma") {
    require_params(a, true, true, true, false, false);
    return GenGammaParams(a.alpha, a.eta, a.beta);
  }
  if (a.family == "invgamma") {
    require_params(a, false, true, false, true, false);
    return InvGammaParams(a.theta, a.eta);
  }
  if (a.family == "symmetric") {
    require_params(a, true, true, true, false, false);
    return SymmetricParams(a.alpha, a.eta, a.beta);
  }
  if (a.family == "locscale") {
    require_params(a, true, true, true, true, true);
    return LocScaleParams(SymmetricParams(a.alpha, a.eta, a.beta), a.theta,
                          a.sigma);
  }
  throw UsageError("dist: unknown family '" + a.family + "'");
}

std::vector<Field> echo_fields(const char* command, const DistArgs& a) {
  return {
      fstr("command", command),
      fstr("family", a.family),
      a.has_alpha ? fnum("alpha", a.alpha) : fnull("alpha"),
      a.has_eta ? fnum("eta", a.eta) : fnull("eta"),
      a.has_beta ? fnum("beta", a.beta) : fnull("beta"),
      a.has_theta ? fnum("theta", a.theta) : fnull("theta"),
      a.has_sigma ? fnum("sigma", a.sigma) : fnull("sigma"),
  };
}

int run_dist_point(const char* command, const DistArgs& args,
                   const SeriesConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const DistributionParams params = build_params(args);
  std::vector<Field> fields = echo_fields(command, args);

  const std::string cmd = command;
  if (cmd == "dist.pdf") {
    fields.push_back(fnum("x", args.x));
    fields.push_back(fnum("value", pdf(params, args.x)));
  } else if (cmd == "dist.cdf") {
    fields.push_back(fnum("x", args.x));
    fields.push_back(fnum("value", cdf(params, args.x, cfg)));
  } else if (cmd == "dist.quantile") {
    fields.push_back(fnum("p", args.p));
    fields.push_back(fnum("value", quantile(params, args.p, cfg)));
  } else if (cmd == "dist.moment") {
    fields.push_back(fint("n", static_cast<long long>(args.n)));
    fields.push_back(fnum("value", raw_moment(params, args.n)));
  } else {  // dist.meanvar
    const auto [mean, variance] = mean_variance(params);
    fields.push_back(fnum("mean", mean));
    fields.push_back(fnum("variance", variance));
  }
  if (args.out.timing) fields.push_back(fnum("elapsed_ms", elapsed_ms_since(t0)));
  Emitter(args.out.mode()).row(fields);
  return 0;
}

int run_dist_sample(const DistArgs& args, const SeriesConfig& cfg) {
  const DistributionParams params = build_params(args);
  const std::vector<double> draws = sample(params, args.n, args.seed, cfg);

  Emitter emitter(args.out.mode());
  if (args.out.mode() == OutputMode::kHuman) {
    std::vector<Field> header = echo_fields("dist.sample", args);
    header.push_back(fint("n", static_cast<long long>(args.n)));
    header.push_back(fint("seed", static_cast<long long>(args.seed)));
    emitter.row(header);
    for (double v : draws) emitter.row({fnum("sample", v)});
  } else {
    for (std::size_t i = 0; i < draws.size(); ++i) {
      std::vector<Field> row = echo_fields("dist.sample", args);
      row.push_back(fint("n", static_cast<long long>(args.n)));
      row.push_back(fint("seed", static_cast<long long>(args.seed)));
      row.push_back(fint("index", static_cast<long long>(i)));
      row.push_back(fnum("value", draws[i]));
      emitter.row(row);
    }
  }
  return 0;
}

int run_dist_curve(const DistArgs& args, const SeriesConfig& cfg) {
  if (args.points < 2) throw UsageError("dist curve: --points must be >= 2");
  if (!(args.from < args.to))
    throw UsageError("dist curve: need --from < --to");
  const DistributionParams params = build_params(args);

  Emitter emitter(args.out.mode());
  for (unsigned long long i = 0; i < args.points; ++i) {
    const double x =
        args.from + (args.to - args.from) * static_cast<double>(i) /
                        static_cast<double>(args.points - 1);
    std::vector<Field> row = echo_fields("dist.curve", args);
    row.push_back(fnum("x", x));
    row.push_back(fnum("pdf", pdf(params, x)));
    row.push_back(fnum("cdf", cdf(params, x, cfg)));
    emitter.row(row);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  SeriesConfig cfg;
  if (const char* env = std::getenv("HYPERINT_MAX_TERMS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      std::cerr << "error: HYPERINT_MAX_TERMS must be a positive integer\n";
      return 2;
    }
    cfg.max_terms = static_cast<std::size_t>(v);
  }

  CLI::App app{
      "hyperint: closed-form power-kernel integrals, hypergeometric identity "
      "checks, and gamma-type distributions"};
  app.require_subcommand(1);

  IntegralArgs ia;
  IdentityArgs da;
  DistArgs sa;

  // --- integral ---
  auto* integral = app.add_subcommand("integral", "Closed-form integrals");
  integral->require_subcommand(1);
  const std::vector<std::string> kinds{"exp", "cosh", "sinh", "cos", "sin"};

  auto* ieval = integral->add_subcommand("eval", "Antiderivative F(x), F(0+)=0");
  ieval->add_option("--kind", ia.kind, "Kernel")->required()->check(CLI::IsMember(kinds));
  ieval->add_option("--alpha", ia.alpha, "Power exponent")->required();
  ieval->add_option("--eta", ia.eta, "Kernel coefficient")->required();
  ieval->add_option("--beta", ia.beta, "Kernel exponent")->required();
  ieval->add_option("--x", ia.x, "Evaluation point (>= 0)")->required();
  ieval->add_flag("--verify", ia.verify, "Cross-check against quadrature");
  ieval->add_option("--tol", ia.tol, "Verification tolerance (default 1e-6)");
  add_output_flags(ieval, ia.out);

  auto* idef = integral->add_subcommand("definite", "Definite integral on [a,b]");
  idef->add_option("--kind", ia.kind, "Kernel")->required()->check(CLI::IsMember(kinds));
  idef->add_option("--alpha", ia.alpha, "Power exponent")->required();
  idef->add_option("--eta", ia.eta, "Kernel coefficient")->required();
  idef->add_option("--beta", ia.beta, "Kernel exponent")->required();
  idef->add_option("--a", ia.a, "Lower limit (>= 0)")->required();
  idef->add_option("--b", ia.b, "Upper limit (>= a)")->required();
  idef->add_flag("--verify", ia.verify, "Cross-check against quadrature");
  idef->add_option("--tol", ia.tol, "Verification tolerance (default 1e-6)");
  add_output_flags(idef, ia.out);

  auto* ihalf = integral->add_subcommand(
      "halfline", "Integral of x^alpha e^{-eta x^beta} over (0, inf)");
  ihalf->add_option("--alpha", ia.alpha, "Power exponent")->required();
  ihalf->add_option("--eta", ia.eta, "Decay coefficient (> 0)")->required();
  ihalf->add_option("--beta", ia.beta, "Decay exponent")->required();
  ihalf->add_flag("--verify", ia.verify, "Cross-check against quadrature");
  ihalf->add_option("--tol", ia.tol, "Verification tolerance (default 1e-6)");
  add_output_flags(ihalf, ia.out);

  // --- identity ---
  auto* identity = app.add_subcommand("identity", "Identity residual checks");
  identity->require_subcommand(1);
  const std::vector<std::string> ids{"L1a", "L1b", "L1c", "T2", "T3",
                                     "T4",  "T5",  "T6",  "T7"};

  auto* icheck = identity->add_subcommand("check", "Residual at one point");
  icheck->add_option("--id", da.id, "Identity")->required()->check(CLI::IsMember(ids));
  icheck->add_option("--alpha", da.alpha, "Power exponent")->required();
  icheck->add_option("--beta", da.beta, "Kernel exponent")->required();
  auto* oeta = icheck->add_option("--eta", da.eta, "Kernel coefficient (T2..T7)");
  auto* ox = icheck->add_option("--x", da.x, "Evaluation point (T2..T7)");
  auto* oj = icheck->add_option("--j", da.j, "Product order (L1a/L1b/L1c)");
  icheck->add_option("--tol", da.tol, "Failure threshold on rel_residual (default 1e-8)");
  add_output_flags(icheck, da.out);
  icheck->callback([&] {
    da.has_eta = oeta->count() > 0;
    da.has_x = ox->count() > 0;
    da.has_j = oj->count() > 0;
  });

  auto* isweep = identity->add_subcommand("sweep", "Random residual sweep");
  isweep->add_option("--id", da.id, "Identity (T2..T7)")->required()->check(CLI::IsMember(ids));
  isweep->add_option("--samples", da.samples, "Number of random points")->required();
  isweep->add_option("--seed", da.seed, "RNG seed")->required();
  isweep->add_option("--tol", da.tol, "Failure threshold on max rel_residual (default 1e-8)");
  add_output_flags(isweep, da.out);

  // --- dist ---
  auto* dist = app.add_subcommand("dist", "Distribution queries");
  dist->require_subcommand(1);
  const std::vector<std::string> families{"gengamma", "invgamma", "symmetric",
                                          "locscale"};

  auto add_family_options = [&](CLI::App* cmd) {
    cmd->add_option("--family", sa.family, "Distribution family")
        ->required()
        ->check(CLI::IsMember(families));
    auto* oa = cmd->add_option("--alpha", sa.alpha, "Power exponent");
    auto* oe = cmd->add_option("--eta", sa.eta, "Decay coefficient");
    auto* ob = cmd->add_option("--beta", sa.beta, "Decay exponent");
    auto* ot = cmd->add_option("--theta", sa.theta, "Shape (invgamma) or location (locscale)");
    auto* os = cmd->add_option("--sigma", sa.sigma, "Scale (locscale)");
    cmd->callback([&sa, oa, oe, ob, ot, os] {
      sa.has_alpha = oa->count() > 0;
      sa.has_eta = oe->count() > 0;
      sa.has_beta = ob->count() > 0;
      sa.has_theta = ot->count() > 0;
      sa.has_sigma = os->count() > 0;
    });
  };

  auto* dpdf = dist->add_subcommand("pdf", "Density at x");
  add_family_options(dpdf);
  dpdf->add_option("--x", sa.x, "Evaluation point")->required();
  add_output_flags(dpdf, sa.out);

  auto* dcdf = dist->add_subcommand("cdf", "Distribution function at x");
  add_family_options(dcdf);
  dcdf->add_option("--x", sa.x, "Evaluation point")->required();
  add_output_flags(dcdf, sa.out);

  auto* dq = dist->add_subcommand("quantile", "Inverse CDF at p");
  add_family_options(dq);
  dq->add_option("--p", sa.p, "Probability in (0,1)")->required();
  add_output_flags(dq, sa.out);

  auto* dmom = dist->add_subcommand("moment", "Raw moment E[X^n]");
  add_family_options(dmom);
  dmom->add_option("--n", sa.n, "Moment order")->required();
  add_output_flags(dmom, sa.out);

  auto* dmv = dist->add_subcommand("meanvar", "Mean and variance");
  add_family_options(dmv);
  add_output_flags(dmv, sa.out);

  auto* dsample = dist->add_subcommand("sample", "Inverse-CDF sampling");
  add_family_options(dsample);
  dsample->add_option("--n", sa.n, "Number of draws")->required();
  dsample->add_option("--seed", sa.seed, "RNG seed")->required();
  add_output_flags(dsample, sa.out);

  auto* dcurve = dist->add_subcommand("curve", "Emit (x, pdf, cdf) rows");
  add_family_options(dcurve);
  dcurve->add_option("--from", sa.from, "Grid start")->required();
  dcurve->add_option("--to", sa.to, "Grid end")->required();
  dcurve->add_option("--points", sa.points, "Grid size (>= 2)")->required();
  add_output_flags(dcurve, sa.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*ieval) return run_integral_eval(ia, cfg);
    if (*idef) return run_integral_definite(ia, cfg);
    if (*ihalf) return run_integral_halfline(ia);
    if (*icheck) return run_identity_check(da, cfg);
    if (*isweep) return run_identity_sweep(da, cfg);
    if (*dpdf) return run_dist_point("dist.pdf", sa, cfg);
    if (*dcdf) return run_dist_point("dist.cdf", sa, cfg);
    if (*dq) return run_dist_point("dist.quantile", sa, cfg);
    if (*dmom) return run_dist_point("dist.moment", sa, cfg);
    if (*dmv) return run_dist_point("dist.meanvar", sa, cfg);
    if (*dsample) return run_dist_sample(sa, cfg);
    if (*dcurve) return run_dist_curve(sa, cfg);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
