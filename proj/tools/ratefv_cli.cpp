// Command line driver for the ratefv C API: single runs, convergence studies
// and entropy comparisons for the Burgers test problems.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratefv.h"

namespace {

struct ConfigDeleter {
  void operator()(ratefv_config* c) const { ratefv_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<ratefv_config, ConfigDeleter>;

struct Overrides {
  std::string config_file;
  std::optional<std::string> problem, flux, predictor, snapshots, levels, out, redistribute;
  std::optional<long> n, order, visc_width, ref_n;
  std::optional<double> t_end, cfl, t_eval;
  std::size_t times = 20;
};

void add_scheme_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_file, "key=value config file; flags override its values");
  cmd->add_option("--problem", o.problem, "u1, u2 or u3");
  cmd->add_option("--n", o.n, "number of cells");
  cmd->add_option("--t-end", o.t_end, "final time");
  cmd->add_option("--flux", o.flux, "mlf, dafermos, godunov or llf");
  cmd->add_option("--order", o.order, "recovery polynomial degree p");
  cmd->add_option("--cfl", o.cfl, "CFL number");
  cmd->add_option("--redistribute", o.redistribute, "viscosity redistribution on|off");
  cmd->add_option("--visc-width", o.visc_width, "Hann kernel width in interfaces (odd)");
}

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(ratefv_status status, const std::string& what) {
  if (status != RATEFV_OK) {
    throw Failure(what + ": " + ratefv_status_string(status) + ": " + ratefv_last_error());
  }
}

void set(ratefv_config* c, const char* key, const std::string& value) {
  check(ratefv_config_set(c, key, value.c_str()), std::string("--") + key);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ConfigPtr build_config(const Overrides& o) {
  ratefv_config* raw = nullptr;
  check(ratefv_config_create(&raw), "config");
  ConfigPtr c(raw);
  if (!o.config_file.empty()) check(ratefv_config_load_file(c.get(), o.config_file.c_str()), o.config_file);
  if (o.problem) set(c.get(), "problem", *o.problem);
  if (o.n) set(c.get(), "n", std::to_string(*o.n));
  if (o.t_end) set(c.get(), "t_end", num(*o.t_end));
  if (o.flux) set(c.get(), "flux", *o.flux);
  if (o.predictor) set(c.get(), "predictor", *o.predictor);
  if (o.order) set(c.get(), "p", std::to_string(*o.order));
  if (o.cfl) set(c.get(), "cfl", num(*o.cfl));
  if (o.redistribute) set(c.get(), "redistribute", *o.redistribute);
  if (o.visc_width) set(c.get(), "visc_width", std::to_string(*o.visc_width));
  if (o.snapshots) set(c.get(), "snapshots", *o.snapshots);
  if (o.levels) set(c.get(), "levels", *o.levels);
  if (o.ref_n) set(c.get(), "ref_n", std::to_string(*o.ref_n));
  if (o.t_eval) set(c.get(), "t_eval", num(*o.t_eval));
  return c;
}

std::string get(const ratefv_config* c, const char* key) {
  std::size_t needed = 0;
  ratefv_config_get(c, key, nullptr, 0, &needed);
  std::string value(needed, '\0');
  check(ratefv_config_get(c, key, value.data(), value.size(), nullptr), key);
  value.resize(needed - 1);
  return value;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) items.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-rate finite-volume solver for scalar conservation laws"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ratefv_version());

  Overrides run_opts;
  auto* run = app.add_subcommand("run", "integrate one configuration and write snapshot/entropy CSVs");
  add_scheme_options(run, run_opts);
  run->add_option("--predictor", run_opts.predictor, "variance, bsphere or bsphere-discard:<k>");
  run->add_option("--snapshots", run_opts.snapshots, "comma-separated output times");
  run->add_option("--out", run_opts.out, "output directory");

  Overrides conv_opts;
  std::string conv_out = "convergence.csv";
  auto* converge = app.add_subcommand("converge", "EOC table against the exact solution");
  add_scheme_options(converge, conv_opts);
  converge->add_option("--predictor", conv_opts.predictor, "variance, bsphere or bsphere-discard:<k>");
  converge->add_option("--levels", conv_opts.levels, "comma-separated cell counts");
  converge->add_option("--t-eval", conv_opts.t_eval, "evaluation time (before the shock)");
  converge->add_option("--out", conv_out, "output CSV");

  Overrides ent_opts;
  std::string ent_out = "entropy.csv";
  std::string predictors = "variance,bsphere,bsphere-discard:2";
  auto* entropy = app.add_subcommand("entropy", "entropy traces against a fine Godunov reference");
  add_scheme_options(entropy, ent_opts);
  entropy->add_option("--predictor", predictors, "comma-separated predictors, one run each");
  entropy->add_option("--ref-n", ent_opts.ref_n, "cells of the Godunov reference");
  entropy->add_option("--times", ent_opts.times, "number of matched output times");
  entropy->add_option("--out", ent_out, "output CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      ConfigPtr c = build_config(run_opts);
      if (run_opts.out) set(c.get(), "out", *run_opts.out);
      const ratefv_status status = ratefv_run(c.get());
      if (status == RATEFV_ERR_NUMERICAL) {
        std::fprintf(stderr, "run failed: %s\n", ratefv_last_error());
        std::printf("output: %s\n", get(c.get(), "out").c_str());
        return 2;
      }
      check(status, "run");
      std::printf("ok\noutput: %s\n", get(c.get(), "out").c_str());
      return 0;
    }
    if (converge->parsed()) {
      ConfigPtr c = build_config(conv_opts);
      check(ratefv_converge(c.get(), conv_out.c_str()), "converge");
      std::printf("wrote %s\n", conv_out.c_str());
      return 0;
    }
    if (entropy->parsed()) {
      ConfigPtr base = build_config(ent_opts);
      std::vector<ConfigPtr> configs;
      for (const std::string& p : split(predictors)) {
        ratefv_config* raw = nullptr;
        check(ratefv_config_clone(base.get(), &raw), "config");
        configs.emplace_back(raw);
        set(raw, "predictor", p);
      }
      std::vector<const ratefv_config*> handles;
      for (const auto& c : configs) handles.push_back(c.get());
      const long ref_n = ent_opts.ref_n ? *ent_opts.ref_n : std::stol(get(base.get(), "ref_n"));
      check(ratefv_entropy(handles.data(), handles.size(), static_cast<std::size_t>(ref_n), ent_opts.times,
                           ent_out.c_str()),
            "entropy");
      std::printf("wrote %s\n", ent_out.c_str());
      return 0;
    }
  } catch (const Failure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
