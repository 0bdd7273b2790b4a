#include "erange/tools/figures.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <span>

#include "erange/analytic_squarewell.hpp"
#include "erange/error.hpp"
#include "erange/tools/csv.hpp"

namespace erange::tools {

namespace {

constexpr double kR = 1.0;
constexpr std::size_t kFig1Points = 2000;
constexpr double kFig1BetaMax = 10.0;
// improved and basic deviations closer than this count as equal
constexpr double kOrderingSlack = 1e-8;

constexpr std::array<ExpansionKind, 2> kTanKinds{ExpansionKind::ReciprocalSmallA,
                                                 ExpansionKind::ImprovedSmallA};
constexpr std::array<ExpansionKind, 2> kKcotKinds{ExpansionKind::TextbookLargeA,
                                                  ExpansionKind::ImprovedLargeA};

// Shortest round-trip text, for curve names and comments.
std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string label(std::string_view name, double value) {
  return std::string(name) + "=" + shortest(value);
}

struct Context {
  Window window;
  std::size_t n;
  FigureOutput& out;
};

// Records both deviations and an ordering violation if the improved kind
// (second report) is worse than the basic kind (first report).
void check_pair(Context& ctx, const std::string& curve, const ErrorReport& basic,
                const ErrorReport& improved) {
  ctx.out.deviations.push_back({curve, basic.kind, basic.max_abs_dev});
  ctx.out.deviations.push_back({curve, improved.kind, improved.max_abs_dev});
  if (improved.max_abs_dev - basic.max_abs_dev > kOrderingSlack)
    ctx.out.violations.push_back(
        {curve, improved.kind, basic.kind, improved.max_abs_dev, basic.max_abs_dev});
}

void fig1(Context& ctx, CsvWriter& csv) {
  const std::size_t n = ctx.n ? ctx.n : kFig1Points;
  auto points = scattering_length_scan(kR, kFig1BetaMax, n);
  for (double b : kFig2Depths) {
    const bool present = std::any_of(points.begin(), points.end(),
                                     [&](const ScanPoint& p) { return p.beta_r == b; });
    if (!present) points.push_back(scan_point(kR, b));
  }
  std::sort(points.begin(), points.end(),
            [](const ScanPoint& x, const ScanPoint& y) { return x.beta_r < y.beta_r; });

  csv.comment("a/R of a square well versus betaR; a_over_R is empty where pole_flag = 1");
  csv.header({"betaR", "a_over_R", "pole_flag"});
  for (const auto& p : points) {
    csv.row({p.beta_r, p.a_over_r, std::string(p.pole ? "1" : "0")});
  }
}

void fig2(Context& ctx, CsvWriter& csv) {
  csv.comment("tan(delta)/k versus (kR)^2 with r0~ = R");
  for (double b : kFig2Depths) {
    const double a = scattering_length(SquareWell{kR, b});
    std::string line = label("betaR", b) + ": a/R = " + shortest(a / kR);
    if (b == 4.515) line += "; a quoted value of -0.21 is not reproduced by the closed form";
    csv.comment(line);
  }
  csv.header({"betaR", "kR_sq", "exact", "er22", "er23"});
  for (double b : kFig2Depths) {
    const auto reports = compare_expansions(SquareWell{kR, b}, kTanKinds, ParamsPolicy::use_range_R,
                                            ctx.window, ctx.n);
    for (std::size_t i = 0; i < reports[0].samples.size(); ++i) {
      const auto& s0 = reports[0].samples[i];
      const auto& s1 = reports[1].samples[i];
      csv.row({b, s0.kk, s0.exact, s0.approx, s1.approx});
    }
    check_pair(ctx, label("betaR", b), reports[0], reports[1]);
  }
}

void kcot_rows(Context& ctx, CsvWriter& csv, double target, std::optional<double> lead) {
  const double beta = depth_for_target(target) / kR;
  const SquareWell well{kR, beta};
  auto cells = [&](std::optional<double> x0, double kk, std::optional<double> ex,
                   std::optional<double> e1, std::optional<double> e24, bool pole) {
    if (lead)
      csv.row({x0, kk, ex, e1, e24, std::string(pole ? "1" : "0")});
    else
      csv.row({kk, ex, e1, e24, std::string(pole ? "1" : "0")});
  };
  if (target == 0.0) {
    for (double kk : kk_grid(ctx.window, ctx.n)) {
      const auto rec = exact_phase(well, std::sqrt(kk));
      const bool pole = rec.flags.pole_near_kcot;
      cells(lead, kk, pole ? std::nullopt : std::optional<double>(rec.k_cot_delta), std::nullopt,
            std::nullopt, pole);
    }
    return;
  }
  const auto reports =
      compare_expansions(well, kKcotKinds, ParamsPolicy::use_range_R, ctx.window, ctx.n);
  for (std::size_t i = 0; i < reports[0].samples.size(); ++i) {
    const auto& s0 = reports[0].samples[i];
    const auto& s1 = reports[1].samples[i];
    cells(lead, s0.kk, s0.flagged ? std::nullopt : std::optional<double>(s0.exact), s0.approx,
          s1.approx, s0.flagged);
  }
  check_pair(ctx, label("a_over_R", target), reports[0], reports[1]);
}

void fig3(Context& ctx, CsvWriter& csv) {
  csv.comment("k cot(delta) versus (kR)^2 with r0 = R; exact_kcot is empty where pole_flag = 1");
  for (double t : kFig3Targets) {
    std::string line = label("a_over_R", t) + ": betaR = " + shortest(depth_for_target(t));
    if (t == 0.0)
      line += " (a/R = " + shortest(scattering_length(SquareWell{kR, kNominalZeroDepth})) +
              "); er1 and er24 are undefined at a = 0 and left empty";
    csv.comment(line);
  }
  csv.header({"a_over_R", "kR_sq", "exact_kcot", "er1", "er24", "pole_flag"});
  for (double t : kFig3Targets) kcot_rows(ctx, csv, t, t);
}

void fig4_tan(Context& ctx, CsvWriter& csv, double target) {
  const double beta_r = depth_for_target(target);
  csv.comment("tan(delta)/k versus (kR)^2 with r0~ = R");
  csv.comment(label("a_over_R", target) + ": betaR = " + shortest(beta_r));
  csv.header({"kR_sq", "exact", "er22", "er23"});
  const auto reports = compare_expansions(SquareWell{kR, beta_r / kR}, kTanKinds,
                                          ParamsPolicy::use_range_R, ctx.window, ctx.n);
  for (std::size_t i = 0; i < reports[0].samples.size(); ++i) {
    const auto& s0 = reports[0].samples[i];
    csv.row({s0.kk, s0.exact, s0.approx, reports[1].samples[i].approx});
  }
  check_pair(ctx, label("a_over_R", target), reports[0], reports[1]);
}

void fig4_kcot(Context& ctx, CsvWriter& csv, double target) {
  csv.comment("k cot(delta) versus (kR)^2 with r0 = R; exact_kcot is empty where pole_flag = 1");
  csv.comment(label("a_over_R", target) + ": betaR = " + shortest(depth_for_target(target)));
  csv.header({"kR_sq", "exact_kcot", "er1", "er24", "pole_flag"});
  kcot_rows(ctx, csv, target, std::nullopt);
}

}  // namespace

std::string_view figure_name(FigureId id) noexcept {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4a: return "fig4a";
    case FigureId::fig4b: return "fig4b";
    case FigureId::fig4c: return "fig4c";
    case FigureId::fig4d: return "fig4d";
  }
  return "fig?";
}

std::optional<FigureId> parse_figure(std::string_view name) noexcept {
  for (auto id : kAllFigures)
    if (figure_name(id) == name) return id;
  return std::nullopt;
}

double depth_for_target(double a_over_r) {
  if (a_over_r == 1.0) return std::numbers::pi;
  if (a_over_r == 0.0) return kNominalZeroDepth;
  const double half_pi = std::numbers::pi / 2;
  // a < 0 only below the first bound state; a > 0 between it and the first zero of a
  const Window bracket = a_over_r < 0.0
                             ? Window{1e-3, half_pi - 1e-4}
                             : Window{half_pi + 1e-4, scattering_length_zeros(5.0).at(0)};
  return solve_beta_for_target_a(kR, a_over_r * kR, bracket) * kR;
}

std::string FigureOutput::summary() const {
  std::string s(figure_name(id));
  if (deviations.empty()) {
    s += ": " + std::to_string(rows) + " rows";
    return s;
  }
  s += " max_abs_dev";
  std::string current;
  for (const auto& d : deviations) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8e", d.max_abs_dev);
    if (d.curve != current) {
      s += (current.empty() ? " " : "; ") + d.curve + ":";
      current = d.curve;
    } else {
      s += ",";
    }
    s += std::string(token(d.kind)) + "=" + buf;
  }
  return s;
}

FigureOutput render_figure(FigureId id, const FigureOverrides& overrides) {
  FigureOutput out;
  out.id = id;
  Context ctx{overrides.window.value_or(kDefaultWindow), overrides.n.value_or(0), out};
  validate(ctx.window);
  if (id != FigureId::fig1 && ctx.n == 0) ctx.n = kDefaultSamples;
  if (overrides.n && *overrides.n < 2)
    throw Error(Errc::precondition, "figure grid needs at least 2 points");

  CsvWriter csv;
  switch (id) {
    case FigureId::fig1: fig1(ctx, csv); break;
    case FigureId::fig2: fig2(ctx, csv); break;
    case FigureId::fig3: fig3(ctx, csv); break;
    case FigureId::fig4a: fig4_tan(ctx, csv, -1.0); break;
    case FigureId::fig4b: fig4_tan(ctx, csv, 1.0); break;
    case FigureId::fig4c: fig4_kcot(ctx, csv, -1.0); break;
    case FigureId::fig4d: fig4_kcot(ctx, csv, 1.0); break;
  }
  out.csv = csv.str();
  out.rows = csv.rows();
  return out;
}

int run_figure(const FigureJob& job, std::ostream& out, std::ostream& err) {
  const auto fig = render_figure(job.id, job.overrides);
  std::ofstream file(job.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(Errc::precondition, "cannot open " + job.output_path.string() + " for writing");
  file << fig.csv;
  file.close();
  if (!file) throw Error(Errc::precondition, "failed writing " + job.output_path.string());

  out << fig.summary() << " -> " << job.output_path.string() << '\n';
  for (const auto& v : fig.violations) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.8e > %.8e", v.improved_dev, v.basic_dev);
    err << "ordering violation in " << figure_name(job.id) << " curve " << v.curve << ": "
        << token(v.improved) << " max_abs_dev " << buf << " (" << token(v.basic) << ")\n";
  }
  return fig.violations.empty() ? 0 : 3;
}

}  // namespace erange::tools
