#include "ngrover/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "ngrover/channels.hpp"
#include "ngrover/closed_form.hpp"
#include "ngrover/coherence.hpp"
#include "ngrover/fullstate.hpp"

namespace ngrover {

namespace {

constexpr Engine kEngineOrder[] = {Engine::Closed, Engine::Recursion, Engine::Fullstate};

ResultRow make_row(std::string_view label, std::size_t t, double eta, const SearchSpace& space,
                   const BlochVec2& bloch) {
  const CoherenceRecord c = coherence_record(t, bloch, space);
  return {std::string(label), t,     eta,  space.n_items(), space.marked_count(),
          c.p_suc,            bloch.r_x, bloch.r_z, c.c1, c.s1, c.lower_bound, c.upper_bound};
}

std::vector<ResultRow> recursion_rows(std::string_view label, const SearchSpace& space,
                                      const NoiseLevel& noise, std::size_t steps) {
  std::vector<ResultRow> rows;
  rows.reserve(steps + 1);
  for (const auto& rec : trajectory(space, noise, steps)) {
    rows.push_back(make_row(label, rec.t, noise.eta(), space, rec.bloch));
  }
  return rows;
}

std::vector<ResultRow> closed_rows(const SearchSpace& space, const NoiseLevel& noise,
                                   std::size_t steps, double degenerate_tol) {
  if (!is_representable(space, noise, degenerate_tol)) {
    return recursion_rows(kClosedFallbackLabel, space, noise, steps);
  }
  const ClosedFormSolution sol(space, noise, degenerate_tol);
  std::vector<ResultRow> rows;
  rows.reserve(steps + 1);
  for (std::size_t t = 0; t <= steps; ++t) {
    rows.push_back(make_row(engine_name(Engine::Closed), t, noise.eta(), space,
                            bloch_closed(sol, t)));
  }
  return rows;
}

std::vector<ResultRow> fullstate_rows(const SearchSpace& space, const NoiseLevel& noise,
                                      std::size_t steps) {
  const MarkedSet marked = MarkedSet::evenly_spaced(space);
  std::vector<ResultRow> rows;
  rows.reserve(steps + 1);
  DensityMatrix rho = init_uniform(space);
  for (std::size_t t = 0; t <= steps; ++t) {
    if (t > 0) rho = noisy_grover_step(rho, space, marked, noise);
    const BlochVec2 bloch = effective_bloch(rho, space, marked);
    const CoherenceValues c = coherence_full(rho);
    const double p = success_probability_full(rho, marked);
    const TradeoffBounds b = tradeoff_bounds(p, space);
    rows.push_back({engine_name(Engine::Fullstate), t, noise.eta(), space.n_items(),
                    space.marked_count(), p, bloch.r_x, bloch.r_z, c.c1, c.s1, b.lower,
                    b.upper});
  }
  return rows;
}

// NaN counts as an unbounded deviation.
double deviation(double a, double b) {
  const double d = std::abs(a - b);
  return std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
}

std::vector<Engine> canonical_engines(const std::vector<Engine>& selected) {
  std::vector<Engine> out;
  for (Engine e : kEngineOrder) {
    if (std::find(selected.begin(), selected.end(), e) != selected.end()) out.push_back(e);
  }
  return out;
}

}  // namespace

const char* engine_name(Engine e) noexcept {
  switch (e) {
    case Engine::Closed: return "closed";
    case Engine::Recursion: return "recursion";
    case Engine::Fullstate: return "fullstate";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  for (Engine e : kEngineOrder) {
    if (name == engine_name(e)) return e;
  }
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  const SearchSpace space = derive_search_space(n_items, marked_count);
  if (eta_list.empty()) throw ConfigError("eta list is empty");
  for (double eta : eta_list) NoiseLevel::from_eta(eta);
  if (engines.empty()) throw ConfigError("no engine selected");
  if (precision < 1 || precision > 17) throw ConfigError("precision must be in 1..17");
  if (!(degenerate_tol >= 0.0)) throw ConfigError("degenerate tolerance must be >= 0");
  const bool wants_fullstate =
      std::find(engines.begin(), engines.end(), Engine::Fullstate) != engines.end();
  if (wants_fullstate && space.n_items() > kMaxDenseItems) {
    throw ConfigError("fullstate engine supports N <= " + std::to_string(kMaxDenseItems));
  }
}

std::vector<ResultRow> compute_engine_rows(Engine engine, std::uint64_t n_items,
                                           std::uint64_t marked_count, double eta,
                                           std::size_t steps, double degenerate_tol) {
  const SearchSpace space = derive_search_space(n_items, marked_count);
  const NoiseLevel noise = NoiseLevel::from_eta(eta);
  switch (engine) {
    case Engine::Closed: return closed_rows(space, noise, steps, degenerate_tol);
    case Engine::Recursion:
      return recursion_rows(engine_name(Engine::Recursion), space, noise, steps);
    case Engine::Fullstate: return fullstate_rows(space, noise, steps);
  }
  return {};
}

std::vector<ResultRow> run_trajectory(const ExperimentConfig& config,
                                      const EngineRunner& runner) {
  config.validate();
  std::vector<ResultRow> rows;
  for (Engine e : canonical_engines(config.engines)) {
    for (double eta : config.eta_list) {
      auto part = runner(e, config.n_items, config.marked_count, eta, config.steps,
                         config.degenerate_tol);
      rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
    }
  }
  return rows;
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& config, const EngineRunner& runner) {
  config.validate();
  std::vector<ResultRow> rows;
  for (Engine e : canonical_engines(config.engines)) {
    for (double eta : config.eta_list) {
      auto part = runner(e, config.n_items, config.marked_count, eta, config.steps,
                         config.degenerate_tol);
      // First maximum wins on ties.
      auto best = std::max_element(part.begin(), part.end(), [](const auto& a, const auto& b) {
        return a.p_suc < b.p_suc;
      });
      rows.push_back(std::move(*best));
    }
  }
  return rows;
}

std::string format_number(double value, int precision) {
  if (value == 0.0) value = 0.0;  // drop the sign of −0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

void write_csv(std::ostream& out, std::span<const ResultRow> rows, int precision) {
  out << kCsvHeader << '\n';
  const auto f = [precision](double v) { return format_number(v, precision); };
  for (const auto& r : rows) {
    out << r.engine << ',' << r.t << ',' << f(r.eta) << ',' << r.n << ',' << r.m << ','
        << f(r.p_suc) << ',' << f(r.r_x) << ',' << f(r.r_z) << ',' << f(r.c1) << ','
        << f(r.s1) << ',' << f(r.lower_bound) << ',' << f(r.upper_bound) << '\n';
  }
}

double PairDeviation::max() const noexcept { return std::max({p_suc, r_x, r_z}); }

double VerifyReport::max_deviation() const noexcept {
  double worst = 0.0;
  for (const auto& p : pairs) worst = std::max(worst, p.max());
  return worst;
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(pairs.begin(), pairs.end(),
                     [this](const PairDeviation& p) { return p.max() <= tolerance; });
}

std::vector<PairDeviation> VerifyReport::failures() const {
  std::vector<PairDeviation> out;
  for (const auto& p : pairs) {
    if (!(p.max() <= tolerance)) out.push_back(p);
  }
  return out;
}

VerifyReport run_verify(const ExperimentConfig& config, const EngineRunner& runner) {
  config.validate();
  const std::vector<Engine> engines = canonical_engines(config.engines);
  if (engines.size() < 2) throw ConfigError("verify needs at least two engines");

  const SearchSpace space = derive_search_space(config.n_items, config.marked_count);
  VerifyReport report;
  report.n_items = config.n_items;
  report.marked_count = config.marked_count;

  for (double eta : config.eta_list) {
    const bool closed_ok =
        is_representable(space, NoiseLevel::from_eta(eta), config.degenerate_tol);
    std::vector<std::pair<Engine, std::vector<ResultRow>>> series;
    for (Engine e : engines) {
      if (e == Engine::Closed && !closed_ok) {
        report.closed_skipped.push_back(eta);
        continue;
      }
      series.emplace_back(e, runner(e, config.n_items, config.marked_count, eta, config.steps,
                                    config.degenerate_tol));
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
      for (std::size_t j = i + 1; j < series.size(); ++j) {
        const auto& a = series[i].second;
        const auto& b = series[j].second;
        PairDeviation dev{series[i].first, series[j].first, eta, 0.0, 0.0, 0.0, 0};
        if (a.size() != b.size()) {
          dev.p_suc = dev.r_x = dev.r_z = std::numeric_limits<double>::infinity();
        }
        double worst = -1.0;
        for (std::size_t t = 0; t < std::min(a.size(), b.size()); ++t) {
          const double dp = deviation(a[t].p_suc, b[t].p_suc);
          const double dx = deviation(a[t].r_x, b[t].r_x);
          const double dz = deviation(a[t].r_z, b[t].r_z);
          const double here = std::max({dp, dx, dz});
          dev.p_suc = std::max(dev.p_suc, dp);
          dev.r_x = std::max(dev.r_x, dx);
          dev.r_z = std::max(dev.r_z, dz);
          if (here > worst) {
            worst = here;
            dev.worst_t = t;
          }
        }
        report.pairs.push_back(dev);
      }
    }
  }
  return report;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  const auto f = [](double v) { return format_number(v, 3); };
  out << "verify N=" << report.n_items << " M=" << report.marked_count
      << " tolerance=" << f(report.tolerance) << '\n';
  for (double eta : report.closed_skipped) {
    out << "  eta=" << format_number(eta, 12) << " closed: skipped (degenerate spectrum)\n";
  }
  for (const auto& p : report.pairs) {
    out << "  eta=" << format_number(p.eta, 12) << ' ' << engine_name(p.first) << " vs "
        << engine_name(p.second) << ": p_suc " << f(p.p_suc) << " r_x " << f(p.r_x) << " r_z "
        << f(p.r_z) << " (worst t=" << p.worst_t << ")"
        << (p.max() <= report.tolerance ? "" : "  FAIL") << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << " max deviation " << f(report.max_deviation())
      << '\n';
}

const char* figure_name(FigureId id) noexcept {
  switch (id) {
    case FigureId::PsucCaseI: return "psuc_case_i";
    case FigureId::PsucCaseII: return "psuc_case_ii";
    case FigureId::CoherenceCaseI: return "coherence_case_i";
  }
  return "unknown";
}

std::optional<FigureId> parse_figure(std::string_view name) noexcept {
  for (FigureId id : {FigureId::PsucCaseI, FigureId::PsucCaseII, FigureId::CoherenceCaseI}) {
    if (name == figure_name(id)) return id;
  }
  return std::nullopt;
}

ExperimentConfig figure_defaults(FigureId id) {
  ExperimentConfig cfg;
  cfg.n_items = 64;
  cfg.marked_count = 1;
  cfg.steps = 60;
  cfg.engines = {Engine::Closed};
  cfg.eta_list = id == FigureId::PsucCaseII ? std::vector<double>{0.05, 0.1, 0.2, 0.3}
                                            : std::vector<double>{1.0, 0.95, 0.9, 0.8};
  return cfg;
}

FigureData emit_figure_data(FigureId id, const ExperimentConfig& config) {
  config.validate();
  const SearchSpace space = derive_search_space(config.n_items, config.marked_count);
  const SpectralCase wanted =
      id == FigureId::PsucCaseII ? SpectralCase::Overdamped : SpectralCase::Oscillatory;

  FigureData fig;
  fig.id = id;
  for (double eta : config.eta_list) {
    const NoiseLevel noise = NoiseLevel::from_eta(eta);
    const SpectralCase kind = spectral_data(space, noise, config.degenerate_tol).kind;
    if (kind != wanted) {
      throw ConfigError("eta=" + format_number(eta, 12) + " is " + to_string(kind) + ", but " +
                        figure_name(id) + " needs the " + to_string(wanted) + " case");
    }
    const ClosedFormSolution sol(space, noise, config.degenerate_tol);
    std::vector<double> column;
    column.reserve(config.steps + 1);
    for (std::size_t t = 0; t <= config.steps; ++t) {
      const BlochVec2 r = bloch_closed(sol, t);
      column.push_back(id == FigureId::CoherenceCaseI ? coherence_rel_entropy(r, space).c1
                                                      : r.success_probability());
    }
    fig.etas.push_back(eta);
    fig.columns.push_back(std::move(column));
  }
  return fig;
}

void write_figure_csv(std::ostream& out, const FigureData& fig, int precision) {
  out << 't';
  for (double eta : fig.etas) out << ",eta=" << format_number(eta, precision);
  out << '\n';
  const std::size_t rows = fig.columns.empty() ? 0 : fig.columns.front().size();
  for (std::size_t t = 0; t < rows; ++t) {
    out << t;
    for (const auto& col : fig.columns) out << ',' << format_number(col[t], precision);
    out << '\n';
  }
}

}  // namespace ngrover
