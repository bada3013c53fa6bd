#include "ratefv/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ratefv/error.hpp"

namespace ratefv {

namespace {

using std::numbers::pi;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw InvalidArgument("'" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
  }
  return v;
}

long long parse_integer(std::string_view key, std::string_view text) {
  text = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("'" + std::string(key) + "' expects an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
  const long long v = parse_integer(key, text);
  if (v <= 0) throw InvalidArgument("'" + std::string(key) + "' must be positive");
  return static_cast<std::size_t>(v);
}

bool parse_switch(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "on" || text == "true" || text == "1" || text == "yes") return true;
  if (text == "off" || text == "false" || text == "0" || text == "no") return false;
  throw InvalidArgument("'" + std::string(key) + "' expects on or off, got '" + std::string(text) + "'");
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> items;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return items;
}

SmoothInitialData sine_data(double offset, double amplitude) {
  return {[=](double x) { return offset + amplitude * std::sin(pi * x); },
          [=](double x) { return amplitude * pi * std::cos(pi * x); }};
}

Problem smooth_periodic(std::string name, double offset, double amplitude) {
  Problem p;
  p.name = std::move(name);
  p.x_left = 0.0;
  p.x_right = 2.0;
  p.bc = {BoundaryKind::periodic};
  p.smooth = sine_data(offset, amplitude);
  p.u0 = p.smooth->u0;
  const SmoothInitialData data = *p.smooth;
  p.exact = [data](double x, double t) { return backtrack_value(data, x, t, Burgers{}); };
  p.exact_kinks = [](double) { return std::vector<double>{}; };
  return p;
}

}  // namespace

Problem make_problem(std::string_view name) {
  if (name == "u1") return smooth_periodic("u1", 0.0, 1.0);
  if (name == "u3") return smooth_periodic("u3", 1.0, 1.0 / 50.0);
  if (name == "u2") {
    Problem p;
    p.name = "u2";
    p.x_left = 0.5;
    p.x_right = 1.5;
    p.bc = {BoundaryKind::outflow};
    p.u0 = [](double x) { return x < 1.0 ? -1.0 : 1.0; };
    p.initial_breaks = {1.0};
    p.exact = [](double x, double t) {
      if (t <= 0.0) return x < 1.0 ? -1.0 : 1.0;
      return riemann_rarefaction_burgers(-1.0, 1.0, x, t, 1.0);
    };
    p.exact_kinks = [](double t) { return t > 0.0 ? std::vector<double>{1.0 - t, 1.0 + t} : std::vector<double>{1.0}; };
    return p;
  }
  throw InvalidArgument("unknown problem '" + std::string(name) + "' (expected u1, u2 or u3)");
}

void ExperimentSpec::sync_with_problem() { scheme.bc = make_problem(problem).bc; }

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> values;
  for (std::string_view item : split_list(text)) values.push_back(parse_double("list", item));
  return values;
}

void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "problem") {
    spec.problem = std::string(make_problem(value).name);
    spec.sync_with_problem();
  } else if (key == "law") {
    spec.scheme.law = make_law(std::string(value));
  } else if (key == "flux") {
    spec.scheme.flux = parse_flux_kind(value);
  } else if (key == "predictor") {
    spec.scheme.predictor = parse_predictor(value);
  } else if (key == "p" || key == "order") {
    const long long p = parse_integer(key, value);
    if (p < 0 || p > 8) throw InvalidArgument("'p' must lie in [0, 8]");
    spec.scheme.order = static_cast<int>(p);
  } else if (key == "cfl") {
    spec.scheme.cfl = parse_double(key, value);
    if (!(spec.scheme.cfl > 0.0)) throw InvalidArgument("'cfl' must be positive");
  } else if (key == "n") {
    spec.n_cells = parse_count(key, value);
  } else if (key == "t_end") {
    spec.t_end = parse_double(key, value);
    if (spec.t_end < 0.0) throw InvalidArgument("'t_end' must be nonnegative");
  } else if (key == "snapshots") {
    spec.snapshots = parse_number_list(value);
  } else if (key == "redistribute") {
    spec.scheme.redistribute = parse_switch(key, value);
  } else if (key == "visc_width") {
    spec.scheme.visc_width = parse_count(key, value);
  } else if (key == "out") {
    spec.out = std::string(value);
  } else if (key == "levels") {
    spec.levels.clear();
    for (std::string_view item : split_list(value)) spec.levels.push_back(parse_count(key, item));
  } else if (key == "ref_n") {
    spec.ref_n = parse_count(key, value);
  } else if (key == "t_eval") {
    spec.t_eval = parse_double(key, value);
  } else {
    throw InvalidArgument("unknown setting '" + std::string(key) + "'");
  }
}

void load_config(ExperimentSpec& spec, std::istream& is) {
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    try {
      apply_setting(spec, view.substr(0, eq), view.substr(eq + 1));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void load_config_file(ExperimentSpec& spec, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config '" + path + "'");
  load_config(spec, is);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

IntegrationResult simulate(const ExperimentSpec& spec) {
  const Problem problem = make_problem(spec.problem);
  SchemeConfig scheme = spec.scheme;
  scheme.bc = problem.bc;
  const Grid1D grid(problem.x_left, problem.x_right, spec.n_cells);
  const CellField field0 = project_initial_condition(problem.u0, grid, kDefaultQuadNodes, problem.initial_breaks);
  std::vector<double> times = spec.snapshots;
  if (times.empty()) times.push_back(spec.t_end);
  return integrate(field0, scheme, spec.t_end, times);
}

RunOutput run_experiment(const ExperimentSpec& spec) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(spec.out, ec);
  if (ec) throw IoError("cannot create output directory '" + spec.out + "': " + ec.message());
  const fs::path dir(spec.out);

  RunOutput out;
  try {
    out.result = simulate(spec);
    out.ok = true;
    out.status = "ok steps=" + std::to_string(out.result.steps);
  } catch (const NumericalError& e) {
    out.ok = false;
    out.status = std::string("failed: ") + e.what();
  }

  if (out.ok) {
    for (std::size_t i = 0; i < out.result.snapshots.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "snapshot_%zu_t%g.csv", i, out.result.snapshots[i].t);
      const std::string path = (dir / name).string();
      write_csv(path, out.result.snapshots[i].field);
      out.files.push_back(path);
    }
    const std::string trace_path = (dir / "entropy.csv").string();
    std::ofstream trace(trace_path);
    if (!trace) throw IoError("cannot open '" + trace_path + "' for writing");
    trace << "t,entropy\n";
    for (const EntropySample& s : out.result.entropy_trace) {
      trace << format_double(s.t) << ',' << format_double(s.entropy) << '\n';
    }
    if (!trace) throw IoError("failed writing '" + trace_path + "'");
    out.files.push_back(trace_path);
  }

  const std::string status_path = (dir / "status.txt").string();
  std::ofstream status(status_path);
  if (!status) throw IoError("cannot open '" + status_path + "' for writing");
  status << out.status << '\n';
  out.files.push_back(status_path);
  return out;
}

std::vector<ConvergenceRow> convergence_study(const ExperimentSpec& spec, const std::vector<std::size_t>& levels,
                                              double t_eval) {
  if (levels.empty()) throw InvalidArgument("convergence_study: no levels");
  if (!(t_eval >= 0.0)) throw InvalidArgument("convergence_study: t_eval must be nonnegative");
  const Problem problem = make_problem(spec.problem);
  if (problem.smooth) {
    const double t_shock = shock_time(*problem.smooth, *spec.scheme.law, problem.x_left, problem.x_right);
    if (!(t_eval < t_shock)) {
      throw InvalidArgument("convergence_study: t_eval " + format_double(t_eval) + " is not before the shock time " +
                            format_double(t_shock));
    }
  }

  std::vector<std::future<ConvergenceRow>> jobs;
  for (std::size_t n : levels) {
    jobs.push_back(std::async(std::launch::async, [&spec, &problem, n, t_eval] {
      ExperimentSpec level = spec;
      level.n_cells = n;
      level.t_end = t_eval;
      level.snapshots = {t_eval};
      const IntegrationResult result = simulate(level);
      const Grid1D grid(problem.x_left, problem.x_right, n);
      const auto kinks = problem.exact_kinks(t_eval);
      const CellField reference = exact_cell_means(
          [&problem, t_eval](double x) { return problem.exact(x, t_eval); }, grid, kDefaultQuadNodes, kinks);
      ConvergenceRow row;
      row.n = n;
      row.l1 = field_error(result.final_field, reference, ErrorNorm::l1);
      row.linf = field_error(result.final_field, reference, ErrorNorm::linf);
      return row;
    }));
  }
  std::vector<ConvergenceRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());

  auto order = [](double e_coarse, double e_fine, std::size_t n_coarse, std::size_t n_fine) -> std::optional<double> {
    if (n_coarse == n_fine || !(e_coarse > 0.0) || !(e_fine > 0.0)) return std::nullopt;
    return std::log(e_coarse / e_fine) / std::log(static_cast<double>(n_fine) / static_cast<double>(n_coarse));
  };
  for (std::size_t i = 1; i < rows.size(); ++i) {
    rows[i].eoc_l1 = order(rows[i - 1].l1, rows[i].l1, rows[i - 1].n, rows[i].n);
    rows[i].eoc_linf = order(rows[i - 1].linf, rows[i].linf, rows[i - 1].n, rows[i].n);
  }
  return rows;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "N,L1,Linf,EOC_L1,EOC_Linf\n";
  for (const ConvergenceRow& row : rows) {
    os << row.n << ',' << format_double(row.l1) << ',' << format_double(row.linf) << ',';
    if (row.eoc_l1) os << format_double(*row.eoc_l1);
    os << ',';
    if (row.eoc_linf) os << format_double(*row.eoc_linf);
    os << '\n';
  }
}

std::vector<double> uniform_times(double t_end, std::size_t n) {
  if (n < 2) return {t_end};
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i) times[i] = t_end * static_cast<double>(i) / static_cast<double>(n - 1);
  times.back() = t_end;
  return times;
}

namespace {

std::string spec_label(const ExperimentSpec& spec) {
  std::string label = to_string(spec.scheme.flux);
  if (!spec.scheme.first_order()) label += "-" + to_string(spec.scheme.predictor);
  label += "-N" + std::to_string(spec.n_cells);
  return label;
}

}  // namespace

EntropyTable entropy_compare(const std::vector<ExperimentSpec>& specs, std::size_t ref_n,
                             const std::vector<double>& times) {
  if (specs.empty()) throw InvalidArgument("entropy_compare: no specs");
  for (const ExperimentSpec& s : specs) {
    if (s.problem != specs.front().problem || s.t_end != specs.front().t_end) {
      throw InvalidArgument("entropy_compare: specs must share problem and t_end");
    }
  }
  std::vector<ExperimentSpec> runs = specs;
  ExperimentSpec reference = specs.front();
  reference.scheme.flux = FluxKind::godunov;
  reference.n_cells = ref_n;
  runs.push_back(reference);

  std::vector<std::future<std::vector<double>>> jobs;
  for (ExperimentSpec& run : runs) {
    run.snapshots = times;
    jobs.push_back(std::async(std::launch::async, [&run] {
      const IntegrationResult result = simulate(run);
      std::vector<double> column;
      for (const Snapshot& s : result.snapshots) column.push_back(s.entropy);
      return column;
    }));
  }

  EntropyTable table;
  table.times = times;
  std::sort(table.times.begin(), table.times.end());
  for (std::size_t i = 0; i < specs.size(); ++i) table.labels.push_back(spec_label(specs[i]));
  table.labels.push_back("ref");
  for (auto& job : jobs) table.columns.push_back(job.get());
  return table;
}

void write_entropy_csv(std::ostream& os, const EntropyTable& table) {
  os << 't';
  for (const std::string& label : table.labels) os << ",E_" << label;
  os << '\n';
  for (std::size_t i = 0; i < table.times.size(); ++i) {
    os << format_double(table.times[i]);
    for (const auto& column : table.columns) os << ',' << format_double(column[i]);
    os << '\n';
  }
}

}  // namespace ratefv
