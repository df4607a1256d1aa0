#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngrover/model.hpp"

namespace ngrover {

/// Invalid experiment configuration (maps to the CLI usage-error exit code).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Engine { Closed, Recursion, Fullstate };

const char* engine_name(Engine e) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

struct ExperimentConfig {
  std::uint64_t n_items = 64;
  std::uint64_t marked_count = 1;
  std::vector<double> eta_list{1.0};
  std::size_t steps = 60;
  std::vector<Engine> engines{Engine::Closed};
  std::string output_path;  // empty means stdout
  int precision = 12;
  double degenerate_tol = kDegenerateTolerance;

  /// Throws ConfigError (or ParameterError for N, M, η) on invalid settings.
  void validate() const;
};

/// One CSV row: engine,t,eta,n,m,p_suc,r_x,r_z,c1,s1,lower_bound,upper_bound.
struct ResultRow {
  std::string engine;
  std::size_t t = 0;
  double eta = 0.0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double p_suc = 0.0;
  double r_x = 0.0;
  double r_z = 0.0;
  double c1 = 0.0;
  double s1 = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "engine,t,eta,n,m,p_suc,r_x,r_z,c1,s1,lower_bound,upper_bound";

/// Label used for closed-form rows that were computed by the recursion
/// engine because the spectrum is degenerate.
inline constexpr std::string_view kClosedFallbackLabel = "closed-fallback";

/// Rows t = 0..steps for one engine and one η.
using EngineRunner = std::function<std::vector<ResultRow>(
    Engine, std::uint64_t n_items, std::uint64_t marked_count, double eta, std::size_t steps,
    double degenerate_tol)>;

std::vector<ResultRow> compute_engine_rows(Engine engine, std::uint64_t n_items,
                                           std::uint64_t marked_count, double eta,
                                           std::size_t steps, double degenerate_tol);

/// Rows ordered by engine (closed, recursion, fullstate), then by η in
/// configuration order, then by t.
std::vector<ResultRow> run_trajectory(const ExperimentConfig& config,
                                      const EngineRunner& runner = compute_engine_rows);

/// For every selected engine and η, the row of maximal p_suc over t.
std::vector<ResultRow> run_sweep(const ExperimentConfig& config,
                                 const EngineRunner& runner = compute_engine_rows);

/// Formats with `precision` significant digits in the C locale; −0 prints as 0.
std::string format_number(double value, int precision);

void write_csv(std::ostream& out, std::span<const ResultRow> rows, int precision);

inline constexpr double kVerifyTolerance = 1e-9;

struct PairDeviation {
  Engine first = Engine::Closed;
  Engine second = Engine::Recursion;
  double eta = 0.0;
  double p_suc = 0.0;
  double r_x = 0.0;
  double r_z = 0.0;
  std::size_t worst_t = 0;

  double max() const noexcept;
};

struct VerifyReport {
  std::uint64_t n_items = 0;
  std::uint64_t marked_count = 0;
  double tolerance = kVerifyTolerance;
  std::vector<PairDeviation> pairs;
  std::vector<double> closed_skipped;  // η values with a degenerate spectrum

  double max_deviation() const noexcept;
  bool passed() const noexcept;
  std::vector<PairDeviation> failures() const;
};

/// Pairwise comparison of the selected engines on every η of the config.
/// Requires at least two engines.
VerifyReport run_verify(const ExperimentConfig& config,
                        const EngineRunner& runner = compute_engine_rows);

void write_report(std::ostream& out, const VerifyReport& report);

enum class FigureId { PsucCaseI, PsucCaseII, CoherenceCaseI };

const char* figure_name(FigureId id) noexcept;
std::optional<FigureId> parse_figure(std::string_view name) noexcept;

/// N = 64, M = 1, 60 steps and the default η list of the figure.
ExperimentConfig figure_defaults(FigureId id);

struct FigureData {
  FigureId id = FigureId::PsucCaseI;
  std::vector<double> etas;
  // columns[k][t] is p_suc (or C₁) at step t for etas[k].
  std::vector<std::vector<double>> columns;
};

/// Throws ConfigError when an η does not belong to the figure's spectral case.
FigureData emit_figure_data(FigureId id, const ExperimentConfig& config);

/// Wide CSV: header `t,eta=<v>,…`, one row per step.
void write_figure_csv(std::ostream& out, const FigureData& fig, int precision);

}  // namespace ngrover
