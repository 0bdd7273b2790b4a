#pragma once

// CSV reproductions of the scattering-length curve and the expansion-vs-exact
// comparisons for the named square wells (R = 1 throughout).

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erange/analysis.hpp"

namespace erange::tools {

enum class FigureId { fig1, fig2, fig3, fig4a, fig4b, fig4c, fig4d };

inline constexpr FigureId kAllFigures[] = {FigureId::fig1,  FigureId::fig2,  FigureId::fig3,
                                           FigureId::fig4a, FigureId::fig4b, FigureId::fig4c,
                                           FigureId::fig4d};

std::string_view figure_name(FigureId id) noexcept;
std::optional<FigureId> parse_figure(std::string_view name) noexcept;

struct FigureOverrides {
  std::optional<Window> window;   // k^2 window for fig2..fig4d
  std::optional<std::size_t> n;   // sample count (beta R grid size for fig1)
};

struct FigureJob {
  FigureId id = FigureId::fig1;
  std::filesystem::path output_path;
  FigureOverrides overrides;
};

/// max_abs_dev of one expansion on one curve.
struct CurveDeviation {
  std::string curve;  // e.g. "betaR=4.4" or "a_over_R=-1"
  ExpansionKind kind{};
  double max_abs_dev = 0.0;
};

/// A curve whose improved expansion deviates more than its basic one.
struct OrderingViolation {
  std::string curve;
  ExpansionKind improved{};
  ExpansionKind basic{};
  double improved_dev = 0.0;
  double basic_dev = 0.0;
};

struct FigureOutput {
  FigureId id = FigureId::fig1;
  std::string csv;
  std::size_t rows = 0;
  std::vector<CurveDeviation> deviations;
  std::vector<OrderingViolation> violations;

  /// One line: figure name then max_abs_dev per curve and kind.
  std::string summary() const;
};

/// beta R values of the fig2 curves.
inline constexpr double kFig2Depths[] = {4.4, 4.45, 4.4934, 4.515};

/// a/R targets of the fig3 curves, ascending.
inline constexpr double kFig3Targets[] = {-3.14, 0.0, 2.54};

/// beta R used for the nominal a = 0 curve.
inline constexpr double kNominalZeroDepth = 4.4934;

/// beta R giving a/R = target; a/R = 1 maps to pi exactly, a/R = 0 to 4.4934.
double depth_for_target(double a_over_r);

/// Builds the CSV and deviation summary in memory. Throws erange::Error on a
/// module precondition failure.
FigureOutput render_figure(FigureId id, const FigureOverrides& overrides = {});

/// Renders, writes job.output_path and prints the summary line to `out`.
/// Returns 0, or 3 after naming each violating curve on `err`.
int run_figure(const FigureJob& job, std::ostream& out, std::ostream& err);

}  // namespace erange::tools
