#include "erange/tools/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "erange/analysis.hpp"
#include "erange/analytic_squarewell.hpp"
#include "erange/error.hpp"
#include "erange/radial_solver.hpp"
#include "erange/tools/csv.hpp"
#include "erange/tools/figures.hpp"

namespace erange::tools {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw UsageError("bad number '" + std::string(s) + "' for " + std::string(what));
  return v;
}

// "lo:hi"
Window parse_range(const std::string& text, std::string_view what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError(std::string(what) + " must look like lo:hi, got '" + text + "'");
  std::string_view sv(text);
  return {parse_double(sv.substr(0, colon), what), parse_double(sv.substr(colon + 1), what)};
}

struct Globals {
  std::string out_path;
  std::optional<double> kk_min;
  std::optional<double> kk_max;
  std::optional<std::size_t> n;
  std::optional<double> step;
  std::string window;

  bool window_given() const { return kk_min || kk_max || !window.empty(); }

  Window resolve_window(Window fallback) const {
    Window w = fallback;
    if (!window.empty()) w = parse_range(window, "--window");
    if (kk_min) w.lo = *kk_min;
    if (kk_max) w.hi = *kk_max;
    validate(w);
    return w;
  }

  std::size_t samples() const { return n.value_or(kDefaultSamples); }

  SolverConfig solver() const {
    SolverConfig cfg;
    cfg.step = step;
    validate(cfg);
    return cfg;
  }
};

struct WellOptions {
  std::string potential;
  std::optional<double> beta;
  double range = 1.0;

  void attach(CLI::App* app) {
    auto* p = app->add_option("--potential", potential, "well, e.g. squarewell:R=1,beta=4.4934");
    auto* b = app->add_option("--beta", beta, "square-well depth beta (shorthand for --potential)");
    app->add_option("--R", range, "square-well range for --beta")->capture_default_str();
    p->excludes(b);
  }

  PotentialSpec spec() const {
    PotentialSpec s;
    if (!potential.empty())
      s = parse_potential(potential);
    else if (beta)
      s = SquareWell{range, *beta};
    else
      throw UsageError("a well is required: --potential or --beta");
    validate(s);
    return s;
  }

  SquareWell square_well(std::string_view cmd) const {
    const auto s = spec();
    if (const auto* w = std::get_if<SquareWell>(&s)) return *w;
    throw UsageError(std::string(cmd) + " needs a square well");
  }
};

void emit(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(Errc::precondition, "cannot open " + g.out_path + " for writing");
  file << text;
  file.close();
  if (!file) throw Error(Errc::precondition, "failed writing " + g.out_path);
}

std::optional<double> finite(double x) {
  return std::isfinite(x) ? std::optional<double>(x) : std::nullopt;
}

std::string phase_table(const std::vector<double>& grid, auto&& record_at) {
  CsvWriter csv;
  csv.header({"k", "k_sq", "delta", "tan_delta_over_k", "k_cot_delta", "pole_flag"});
  for (double kk : grid) {
    const double k = std::sqrt(kk);
    const PhaseRecord rec = record_at(k);
    csv.row({k, kk, rec.delta, finite(rec.tan_delta_over_k), finite(rec.k_cot_delta),
             std::string(rec.flags.any() ? "1" : "0")});
  }
  return csv.str();
}

std::vector<PhaseRecord> records_from_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::precondition, "cannot read " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  const auto table = parse_csv(ss.str());

  const auto kcol = table.find("k");
  if (!kcol) throw Error(Errc::precondition, path + ": no 'k' column");
  const auto tcol = table.find("tan_delta_over_k");
  const auto dcol = table.find("delta");
  if (!tcol && !dcol)
    throw Error(Errc::precondition, path + ": needs a 'delta' or 'tan_delta_over_k' column");

  std::vector<PhaseRecord> recs;
  for (const auto& row : table.rows) {
    const auto k = row[*kcol];
    if (!k || *k <= 0.0) continue;
    if (tcol && row[*tcol]) {
      recs.push_back(make_phase_record(*k, *k * *row[*tcol], 1.0));
    } else if (dcol && row[*dcol]) {
      recs.push_back(make_phase_record(*k, std::sin(*row[*dcol]), std::cos(*row[*dcol])));
    }
  }
  return recs;
}

ExpansionKind kind_from(const std::string& text) {
  if (auto k = parse_kind(text)) return *k;
  throw UsageError("unknown expansion kind '" + text + "' (er1 er2 er18 er19 er22 er23 er24 inv4)");
}

}  // namespace

PotentialSpec parse_potential(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("potential must look like name:key=value,..., got '" + text + "'");
  const std::string name = text.substr(0, colon);
  std::optional<double> range, depth, strength;

  std::string_view rest(text);
  rest.remove_prefix(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("potential field '" + std::string(item) + "' lacks '='");
    const auto key = item.substr(0, eq);
    const double v = parse_double(item.substr(eq + 1), key);
    if (key == "R")
      range = v;
    else if (key == "beta" && name == "squarewell")
      depth = v;
    else if (key == "V0" && name != "squarewell")
      strength = v;
    else
      throw std::invalid_argument("unknown field '" + std::string(key) + "' for " + name);
  }

  const double R = range.value_or(1.0);
  if (name == "squarewell") {
    if (!depth) throw std::invalid_argument("squarewell needs beta=");
    return SquareWell{R, *depth};
  }
  if (!strength) throw std::invalid_argument(name + " needs V0=");
  if (name == "gaussian") return GaussianWell{*strength, R};
  if (name == "exponential") return ExponentialWell{*strength, R};
  if (name == "yukawa") return YukawaWell{*strength, R};
  throw std::invalid_argument("unknown potential '" + name +
                              "' (squarewell, gaussian, exponential, yukawa)");
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective-range expansions and S-wave phase shifts of short-range wells", "erange"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Globals g;
  app.add_option("--out", g.out_path, "write output to this file instead of stdout");
  auto* kk_min = app.add_option("--kk-min", g.kk_min, "lower end of the k^2 window");
  auto* kk_max = app.add_option("--kk-max", g.kk_max, "upper end of the k^2 window");
  app.add_option("--n", g.n, "number of k^2 samples")->check(CLI::PositiveNumber);
  app.add_option("--step", g.step, "Numerov grid step h");
  app.add_option("--window", g.window, "k^2 window as lo:hi")->excludes(kk_min)->excludes(kk_max);

  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  WellOptions well;
  auto* scatlen = sub("scatlen", "scattering length of a square well");
  well.attach(scatlen);

  WellOptions phase_well;
  auto* phase = sub("phase", "Numerov phase shifts on a k^2 grid");
  phase_well.attach(phase);

  WellOptions exact_well;
  auto* exact = sub("exact", "closed-form square-well phase shifts on a k^2 grid");
  exact_well.attach(exact);

  WellOptions id_well;
  auto* identity = sub("identity", "integral identity versus tan(delta)/k on a k^2 grid");
  id_well.attach(identity);

  WellOptions coeff_well;
  auto* coeffs = sub("coeffs", "low-energy Taylor coefficients of a square well");
  coeff_well.attach(coeffs);

  std::string kind_text;
  ErParams params;
  auto* expand = sub("expand", "evaluate one expansion on a k^2 grid");
  expand->add_option("--kind", kind_text, "er1 er2 er18 er19 er22 er23 er24 inv4")->required();
  expand->add_option("--a", params.a, "scattering length")->required();
  expand->add_option("--r0", params.r0, "effective range")->required();

  std::string in_path, fit_kind;
  auto* fit = sub("fit", "least-squares fit of an expansion to a record CSV");
  fit->add_option("--in", in_path, "CSV with columns k and delta or tan_delta_over_k")->required();
  fit->add_option("--kind", fit_kind, "expansion kind")->required();

  WellOptions cmp_well;
  std::string kinds_text = "er1,er22,er23,er24", policy_text = "range";
  auto* compare = sub("compare", "max and mean deviation of expansions from the exact function");
  cmp_well.attach(compare);
  compare->add_option("--kinds", kinds_text, "comma-separated kinds")->capture_default_str();
  compare->add_option("--policy", policy_text, "range: (a, R); fitted: least-squares (a, r0)")
      ->check(CLI::IsMember({"range", "fitted"}))
      ->capture_default_str();

  double bfa_range = 1.0, bfa_a = 0.0;
  std::string bracket_text;
  auto* beta_for_a = sub("beta-for-a", "square-well depth giving a target scattering length");
  beta_for_a->add_option("--R", bfa_range, "well range")->capture_default_str();
  beta_for_a->add_option("--a", bfa_a, "target scattering length")->required();
  beta_for_a->add_option("--bracket", bracket_text, "betaR search interval lo:hi")->required();

  std::string fig_name;
  auto* fig = sub("fig", "write one figure's CSV (fig1 fig2 fig3 fig4a fig4b fig4c fig4d)");
  fig->add_option("id", fig_name, "figure id")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (scatlen->parsed()) {
      emit(g, format_number(scattering_length(well.square_well("scatlen"))) + "\n", out);
    } else if (phase->parsed()) {
      const auto spec = phase_well.spec();
      const auto cfg = g.solver();
      const auto grid = kk_grid(g.resolve_window(kDefaultWindow), g.samples());
      emit(g, phase_table(grid, [&](double k) { return solve_phase(spec, k, cfg); }), out);
    } else if (exact->parsed()) {
      const auto w = exact_well.square_well("exact");
      const auto grid = kk_grid(g.resolve_window(kDefaultWindow), g.samples());
      emit(g, phase_table(grid, [&](double k) { return exact_phase(w, k); }), out);
    } else if (identity->parsed()) {
      const auto spec = id_well.spec();
      const auto cfg = g.solver();
      CsvWriter csv;
      csv.header({"k", "k_sq", "tan_delta_over_k", "identity", "abs_diff"});
      for (double kk : kk_grid(g.resolve_window(kDefaultWindow), g.samples())) {
        const double k = std::sqrt(kk);
        const auto* sw = std::get_if<SquareWell>(&spec);
        const double t = sw ? exact_tan_delta_over_k(*sw, k) : solve_phase(spec, k, cfg).tan_delta_over_k;
        const double v = integral_identity(spec, k, cfg);
        csv.row({k, kk, t, v, std::abs(v - t)});
      }
      emit(g, csv.str(), out);
    } else if (coeffs->parsed()) {
      const auto w = coeff_well.square_well("coeffs");
      const auto c = taylor_coefficients(w);
      CsvWriter csv;
      csv.header({"R", "beta", "a", "b_small", "c_large", "r0"});
      csv.row({w.range, w.depth, c.a, c.b_small, c.c_large, c.r0_full});
      emit(g, csv.str(), out);
    } else if (expand->parsed()) {
      const auto kind = kind_from(kind_text);
      validate(kind, params);
      const std::string tok(token(kind));
      CsvWriter csv;
      csv.header({"k", "k_sq", tok});
      for (double kk : kk_grid(g.resolve_window(kDefaultWindow), g.samples())) {
        const double k = std::sqrt(kk);
        csv.row({k, kk, eval_expansion(kind, params, k)});
      }
      emit(g, csv.str(), out);
    } else if (fit->parsed()) {
      const auto kind = kind_from(fit_kind);
      const auto recs = records_from_csv(in_path);
      const auto r = fit_effective_range(recs, kind, g.resolve_window({0.0, kDefaultWindow.hi}));
      CsvWriter csv;
      csv.header({"kind", "a", "r0", "intercept", "slope", "rms_residual", "n_points"});
      csv.row({std::string(token(kind)), r.params.a, r.params.r0, r.line.intercept, r.line.slope,
               r.rms_residual, static_cast<double>(r.n_points)});
      emit(g, csv.str(), out);
    } else if (compare->parsed()) {
      const auto w = cmp_well.square_well("compare");
      std::vector<ExpansionKind> kinds;
      std::string_view rest(kinds_text);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        kinds.push_back(kind_from(std::string(rest.substr(0, comma))));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
      const auto policy =
          policy_text == "fitted" ? ParamsPolicy::use_fitted : ParamsPolicy::use_range_R;
      const auto reports =
          compare_expansions(w, kinds, policy, g.resolve_window(kDefaultWindow), g.samples());
      CsvWriter csv;
      csv.header({"kind", "a", "r0", "max_abs_dev", "mean_abs_dev", "n_flagged"});
      for (const auto& r : reports)
        csv.row({std::string(token(r.kind)), r.params.a, r.params.r0, r.max_abs_dev,
                 r.mean_abs_dev, static_cast<double>(r.n_flagged)});
      emit(g, csv.str(), out);
    } else if (beta_for_a->parsed()) {
      const auto bracket = parse_range(bracket_text, "--bracket");
      emit(g, format_number(solve_beta_for_target_a(bfa_range, bfa_a, bracket)) + "\n", out);
    } else if (fig->parsed()) {
      const auto id = parse_figure(fig_name);
      if (!id) throw UsageError("unknown figure '" + fig_name + "'");
      FigureJob job;
      job.id = *id;
      job.output_path = g.out_path.empty() ? fig_name + ".csv" : g.out_path;
      if (g.window_given()) job.overrides.window = g.resolve_window(kDefaultWindow);
      job.overrides.n = g.n;
      return run_figure(job, out, err);
    }
  } catch (const UsageError& e) {
    err << "erange: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "erange: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "erange: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace erange::tools
