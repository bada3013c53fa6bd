#include "ratefv.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "ratefv/error.hpp"
#include "ratefv/harness.hpp"

struct ratefv_config {
  ratefv::ExperimentSpec spec;
};

struct ratefv_solver {
  ratefv::ExperimentSpec spec;
  ratefv::CellField field;
  double t = 0.0;
};

namespace {

thread_local std::string g_last_error;

ratefv_status fail(ratefv_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
ratefv_status guarded(F&& body) {
  try {
    body();
    return RATEFV_OK;
  } catch (const ratefv::InvalidArgument& e) {
    return fail(RATEFV_ERR_INVALID_ARGUMENT, e.what());
  } catch (const ratefv::NumericalError& e) {
    return fail(RATEFV_ERR_NUMERICAL, e.what());
  } catch (const ratefv::IoError& e) {
    return fail(RATEFV_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RATEFV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RATEFV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RATEFV_ERR_INTERNAL, "unknown error");
  }
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ',';
    out += ratefv::format_double(v);
  }
  return out;
}

std::string config_value(const ratefv::ExperimentSpec& spec, std::string_view key) {
  using ratefv::format_double;
  if (key == "problem") return spec.problem;
  if (key == "law") return spec.scheme.law->name();
  if (key == "flux") return ratefv::to_string(spec.scheme.flux);
  if (key == "predictor") return ratefv::to_string(spec.scheme.predictor);
  if (key == "p" || key == "order") return std::to_string(spec.scheme.order);
  if (key == "cfl") return format_double(spec.scheme.cfl);
  if (key == "n") return std::to_string(spec.n_cells);
  if (key == "t_end") return format_double(spec.t_end);
  if (key == "snapshots") return join(spec.snapshots);
  if (key == "redistribute") return spec.scheme.redistribute ? "on" : "off";
  if (key == "visc_width") return std::to_string(spec.scheme.visc_width);
  if (key == "out") return spec.out;
  if (key == "bc") return ratefv::to_string(spec.scheme.bc);
  if (key == "levels") {
    std::string out;
    for (std::size_t n : spec.levels) {
      if (!out.empty()) out += ',';
      out += std::to_string(n);
    }
    return out;
  }
  if (key == "ref_n") return std::to_string(spec.ref_n);
  if (key == "t_eval") return format_double(spec.t_eval);
  throw ratefv::InvalidArgument("unknown setting '" + std::string(key) + "'");
}

void write_text(const char* path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ratefv::IoError(std::string("cannot open '") + path + "' for writing");
  os << text;
  if (!os) throw ratefv::IoError(std::string("failed writing '") + path + "'");
}

#define RATEFV_REQUIRE(cond, msg) \
  do {                            \
    if (!(cond)) return fail(RATEFV_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

}  // namespace

extern "C" {

const char* ratefv_version(void) { return "0.1.0"; }

const char* ratefv_status_string(ratefv_status status) {
  switch (status) {
    case RATEFV_OK:
      return "ok";
    case RATEFV_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case RATEFV_ERR_NUMERICAL:
      return "numerical failure";
    case RATEFV_ERR_IO:
      return "i/o error";
    case RATEFV_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case RATEFV_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ratefv_last_error(void) { return g_last_error.c_str(); }

ratefv_status ratefv_config_create(ratefv_config** out) {
  RATEFV_REQUIRE(out != nullptr, "ratefv_config_create: null output pointer");
  *out = nullptr;
  return guarded([&] {
    auto config = new ratefv_config{};
    config->spec.sync_with_problem();
    *out = config;
  });
}

ratefv_status ratefv_config_clone(const ratefv_config* config, ratefv_config** out) {
  RATEFV_REQUIRE(config != nullptr && out != nullptr, "ratefv_config_clone: null argument");
  *out = nullptr;
  return guarded([&] { *out = new ratefv_config{*config}; });
}

void ratefv_config_destroy(ratefv_config* config) { delete config; }

ratefv_status ratefv_config_set(ratefv_config* config, const char* key, const char* value) {
  RATEFV_REQUIRE(config != nullptr && key != nullptr && value != nullptr, "ratefv_config_set: null argument");
  return guarded([&] {
    // Apply to a copy so a rejected value leaves the config untouched.
    ratefv::ExperimentSpec spec = config->spec;
    ratefv::apply_setting(spec, key, value);
    config->spec = std::move(spec);
  });
}

ratefv_status ratefv_config_load_file(ratefv_config* config, const char* path) {
  RATEFV_REQUIRE(config != nullptr && path != nullptr, "ratefv_config_load_file: null argument");
  return guarded([&] {
    ratefv::ExperimentSpec spec = config->spec;
    ratefv::load_config_file(spec, path);
    config->spec = std::move(spec);
  });
}

ratefv_status ratefv_config_get(const ratefv_config* config, const char* key, char* buf, size_t buf_len,
                                size_t* needed) {
  RATEFV_REQUIRE(config != nullptr && key != nullptr, "ratefv_config_get: null argument");
  std::string value;
  const ratefv_status status = guarded([&] { value = config_value(config->spec, key); });
  if (status != RATEFV_OK) return status;
  if (needed != nullptr) *needed = value.size() + 1;
  if (buf == nullptr || buf_len < value.size() + 1) {
    return fail(RATEFV_ERR_BUFFER_TOO_SMALL, "ratefv_config_get: buffer too small");
  }
  std::memcpy(buf, value.c_str(), value.size() + 1);
  return RATEFV_OK;
}

ratefv_status ratefv_run(const ratefv_config* config) {
  RATEFV_REQUIRE(config != nullptr, "ratefv_run: null config");
  ratefv::RunOutput output;
  const ratefv_status status = guarded([&] { output = ratefv::run_experiment(config->spec); });
  if (status != RATEFV_OK) return status;
  if (!output.ok) return fail(RATEFV_ERR_NUMERICAL, output.status.c_str());
  return RATEFV_OK;
}

ratefv_status ratefv_converge(const ratefv_config* config, const char* out_path) {
  RATEFV_REQUIRE(config != nullptr && out_path != nullptr, "ratefv_converge: null argument");
  return guarded([&] {
    const auto rows = ratefv::convergence_study(config->spec, config->spec.levels, config->spec.t_eval);
    std::ostringstream os;
    ratefv::write_convergence_csv(os, rows);
    write_text(out_path, os.str());
  });
}

ratefv_status ratefv_entropy(const ratefv_config* const* configs, size_t count, size_t ref_n, size_t n_times,
                             const char* out_path) {
  RATEFV_REQUIRE(configs != nullptr && count > 0 && out_path != nullptr, "ratefv_entropy: null or empty argument");
  RATEFV_REQUIRE(ref_n > 0, "ratefv_entropy: ref_n must be positive");
  for (size_t i = 0; i < count; ++i) RATEFV_REQUIRE(configs[i] != nullptr, "ratefv_entropy: null config");
  return guarded([&] {
    std::vector<ratefv::ExperimentSpec> specs;
    for (size_t i = 0; i < count; ++i) specs.push_back(configs[i]->spec);
    const auto times = ratefv::uniform_times(specs.front().t_end, n_times);
    const auto table = ratefv::entropy_compare(specs, ref_n, times);
    std::ostringstream os;
    ratefv::write_entropy_csv(os, table);
    write_text(out_path, os.str());
  });
}

ratefv_status ratefv_solver_create(const ratefv_config* config, ratefv_solver** out) {
  RATEFV_REQUIRE(config != nullptr && out != nullptr, "ratefv_solver_create: null argument");
  *out = nullptr;
  return guarded([&] {
    const ratefv::Problem problem = ratefv::make_problem(config->spec.problem);
    const ratefv::Grid1D grid(problem.x_left, problem.x_right, config->spec.n_cells);
    auto solver = new ratefv_solver{config->spec,
                                    ratefv::project_initial_condition(problem.u0, grid, ratefv::kDefaultQuadNodes,
                                                                      problem.initial_breaks),
                                    0.0};
    solver->spec.scheme.bc = problem.bc;
    *out = solver;
  });
}

void ratefv_solver_destroy(ratefv_solver* solver) { delete solver; }

ratefv_status ratefv_solver_advance(ratefv_solver* solver, double t_target) {
  RATEFV_REQUIRE(solver != nullptr, "ratefv_solver_advance: null solver");
  RATEFV_REQUIRE(t_target >= solver->t, "ratefv_solver_advance: target time lies in the past");
  return guarded([&] {
    if (t_target == solver->t) return;
    ratefv::IntegrationResult result = ratefv::integrate(solver->field, solver->spec.scheme, t_target - solver->t);
    solver->field = std::move(result.final_field);
    solver->t = t_target;
  });
}

double ratefv_solver_time(const ratefv_solver* solver) { return solver ? solver->t : 0.0; }

size_t ratefv_solver_size(const ratefv_solver* solver) { return solver ? solver->field.size() : 0; }

double ratefv_solver_entropy(const ratefv_solver* solver) {
  return solver ? ratefv::total_entropy(solver->field, *solver->spec.scheme.law) : 0.0;
}

ratefv_status ratefv_solver_means(const ratefv_solver* solver, double* means, double* centers, size_t len) {
  RATEFV_REQUIRE(solver != nullptr && means != nullptr, "ratefv_solver_means: null argument");
  if (len < solver->field.size()) return fail(RATEFV_ERR_BUFFER_TOO_SMALL, "ratefv_solver_means: buffer too small");
  for (size_t k = 0; k < solver->field.size(); ++k) {
    means[k] = solver->field[k];
    if (centers != nullptr) centers[k] = solver->field.grid().cell_center(k);
  }
  return RATEFV_OK;
}

}  // extern "C"
