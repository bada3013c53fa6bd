#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratefv/exact.hpp"
#include "ratefv/grid.hpp"
#include "ratefv/timeint.hpp"

namespace ratefv {

/// One of the Burgers test problems u1, u2, u3.
struct Problem {
  std::string name;
  double x_left = 0.0;
  double x_right = 1.0;
  BoundaryCondition bc{};
  ScalarFunction u0;
  std::vector<double> initial_breaks;
  /// Smooth problems: initial data with derivative for backtracking.
  std::optional<SmoothInitialData> smooth;
  /// Exact solution at (x, t) where available in closed form or by tracing.
  std::function<double(double x, double t)> exact;
  /// Kinks of the exact solution at time t.
  std::function<std::vector<double>(double t)> exact_kinks;
};

/// Throws InvalidArgument for unknown names.
Problem make_problem(std::string_view name);

struct ExperimentSpec {
  std::string problem = "u1";
  SchemeConfig scheme{};
  std::size_t n_cells = 50;
  double t_end = 1.2;
  std::vector<double> snapshots;  // empty means {t_end}
  std::string out = "out";
  std::vector<std::size_t> levels{25, 50, 100, 200};
  std::size_t ref_n = 5000;
  double t_eval = 1.0;

  /// Problem bc replaces scheme bc.
  void sync_with_problem();
};

/// Applies one `key=value` setting. Throws InvalidArgument for unknown keys or
/// malformed values.
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Flat `key=value` lines; blank lines and `#` comments are skipped.
void load_config(ExperimentSpec& spec, std::istream& is);
void load_config_file(ExperimentSpec& spec, const std::string& path);

std::vector<double> parse_number_list(std::string_view text);

struct RunOutput {
  bool ok = false;
  std::string status;
  IntegrationResult result;
  std::vector<std::string> files;
};

/// Runs spec and writes into directory spec.out:
///   snapshot_<i>.csv (x,u), entropy.csv (t,entropy), status.txt.
/// A NaN abort is reported in status.txt and RunOutput, not thrown.
RunOutput run_experiment(const ExperimentSpec& spec);

/// Integrates spec without touching the file system.
IntegrationResult simulate(const ExperimentSpec& spec);

struct ConvergenceRow {
  std::size_t n = 0;
  double l1 = 0.0;
  double linf = 0.0;
  std::optional<double> eoc_l1;
  std::optional<double> eoc_linf;
};

/// Error of each level against exact cell means at t_eval, with the observed
/// order relative to the previous level. Levels run concurrently.
std::vector<ConvergenceRow> convergence_study(const ExperimentSpec& spec, const std::vector<std::size_t>& levels,
                                              double t_eval);
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

struct EntropyTable {
  std::vector<std::string> labels;  // one per spec, then "ref"
  std::vector<double> times;
  std::vector<std::vector<double>> columns;
};

/// Entropy of every spec and of a first-order Godunov run with ref_n cells at
/// `times`. All specs share problem and t_end; runs are concurrent.
EntropyTable entropy_compare(const std::vector<ExperimentSpec>& specs, std::size_t ref_n,
                             const std::vector<double>& times);
void write_entropy_csv(std::ostream& os, const EntropyTable& table);

/// n evenly spaced times covering [0, t_end].
std::vector<double> uniform_times(double t_end, std::size_t n);

/// 17 significant digits.
std::string format_double(double v);

}  // namespace ratefv
