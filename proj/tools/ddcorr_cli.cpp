// Command-line driver for figure-reproduction sweeps.
//
//   ddcorr simulate --preset fig2 --out data.csv
//   ddcorr simulate --gamma0 1 --lambda 0.1 --pulse-T 0.2 --c 0.9,-0.9,1 --tmax 20 --dt 0.01 --out -
//   ddcorr validate --c 0.9,-0.9,1
//
// Exit codes: 0 success, 2 config error, 3 numeric-domain error, 4 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ddcorr.h"

namespace {

constexpr int kExitConfig = 2;

int exit_code(ddc_status status) {
  switch (status) {
    case DDC_OK: return 0;
    case DDC_ERR_INVALID_ARGUMENT:
    case DDC_ERR_CONFIG: return kExitConfig;
    case DDC_ERR_DOMAIN: return 3;
    case DDC_ERR_IO: return 4;
    case DDC_ERR_INTERNAL: break;
  }
  return 1;
}

int report(ddc_status status, const char* context) {
  std::fprintf(stderr, "ddcorr: %s: %s\n", context, ddc_last_error());
  return exit_code(status);
}

struct ConfigDeleter {
  void operator()(ddc_config* c) const { ddc_config_destroy(c); }
};
struct SweepDeleter {
  void operator()(ddc_sweep* s) const { ddc_sweep_destroy(s); }
};
struct TextDeleter {
  void operator()(ddc_text* t) const { ddc_text_destroy(t); }
};
using ConfigPtr = std::unique_ptr<ddc_config, ConfigDeleter>;
using SweepPtr = std::unique_ptr<ddc_sweep, SweepDeleter>;
using TextPtr = std::unique_ptr<ddc_text, TextDeleter>;

// Flags shared by both subcommands, forwarded verbatim as config keys.
struct Flags {
  std::string config_file;
  std::string preset;
  std::vector<std::pair<std::string, std::string>> settings;

  void add(CLI::App& app) {
    app.add_option("--config", config_file, "key = value configuration file (flags override it)");
    app.add_option("--preset", preset, std::string("figure preset: ") + ddc_preset_names());
    add_key(app, "gamma0", "Markovian decay rate");
    add_key(app, "lambda", "reservoir spectral width");
    add_key(app, "pulse-T", "pulse intervals: comma list of numbers, none, or start:stop:step");
    add_key(app, "c", "Bell-diagonal initial state c1,c2,c3");
    add_key(app, "r", "Werner initial state parameter");
    add_key(app, "r-range", "Werner parameter range start:stop:step");
    add_key(app, "lambda-inv-range", "sweep 1/lambda over start:stop:step");
    add_key(app, "gamma0-inv-range", "sweep 1/gamma0 over start:stop:step");
    add_key(app, "tmin", "window start");
    add_key(app, "tmax", "window end");
    add_key(app, "dt", "time step");
    add_key(app, "delta-q", "append dQ = Q(0) - Q(t) (true/false)");
    add_key(app, "out", "CSV output path, - for stdout");
    add_key(app, "gnuplot", "write a gnuplot script stub to this path");
  }

  void add_key(CLI::App& app, const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(
        "--" + key, [this, key](const std::string& v) { settings.emplace_back(key, v); }, help);
  }

  // Builds the configuration: preset (flag, else file), then file, then flags.
  ddc_status build(ConfigPtr& out) const {
    ddc_config* raw = nullptr;
    ddc_status st = config_file.empty() ? ddc_config_create(preset.c_str(), &raw)
                                        : ddc_config_load_file(config_file.c_str(), preset.c_str(), &raw);
    out.reset(raw);
    if (st != DDC_OK) return st;
    for (const auto& [key, value] : settings) {
      st = ddc_config_set(out.get(), key.c_str(), value.c_str());
      if (st != DDC_OK) return st;
    }
    return DDC_OK;
  }
};

int write_output(const std::string& path, const char* data, size_t size) {
  if (path.empty() || path == "-") {
    std::fwrite(data, 1, size, stdout);
    std::fflush(stdout);
    return 0;
  }
  const ddc_status st = ddc_write_file(path.c_str(), data, size);
  return st == DDC_OK ? 0 : report(st, "write");
}

int run_simulate(const Flags& flags, const std::string& summary_path) {
  ConfigPtr config;
  if (ddc_status st = flags.build(config); st != DDC_OK) return report(st, "config");

  ddc_sweep* raw = nullptr;
  const ddc_status st = ddc_sweep_run(config.get(), &raw);
  SweepPtr sweep(raw);
  if (st != DDC_OK) return report(st, "simulate");

  size_t size = 0;
  const char* csv = ddc_sweep_csv(sweep.get(), &size);
  if (int rc = write_output(ddc_config_out(config.get()), csv, size); rc != 0) return rc;

  const char* summary = ddc_sweep_summary(sweep.get(), &size);
  if (summary_path.empty()) {
    std::fwrite(summary, 1, size, stderr);
  } else if (int rc = write_output(summary_path, summary, size); rc != 0) {
    return rc;
  }

  const std::string gnuplot = ddc_config_gnuplot(config.get());
  if (!gnuplot.empty()) {
    const char* script = ddc_sweep_gnuplot(sweep.get(), &size);
    if (int rc = write_output(gnuplot, script, size); rc != 0) return rc;
  }
  return 0;
}

int run_validate(const Flags& flags) {
  ConfigPtr config;
  if (ddc_status st = flags.build(config); st != DDC_OK) return report(st, "config");
  ddc_text* raw = nullptr;
  const ddc_status st = ddc_validate(config.get(), &raw);
  TextPtr text(raw);
  if (st != DDC_OK) return report(st, "validate");
  size_t size = 0;
  const char* data = ddc_text_data(text.get(), &size);
  std::fwrite(data, 1, size, stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlations of two qubits in non-Markovian reservoirs under bang-bang pulses"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ddc_version());

  Flags sim_flags;
  std::string summary_path;
  CLI::App* simulate = app.add_subcommand("simulate", "run a sweep and emit CSV");
  sim_flags.add(*simulate);
  simulate->add_option("--summary", summary_path, "write the event summary here instead of stderr");

  Flags val_flags;
  CLI::App* validate = app.add_subcommand("validate", "report regime, predicted zeros and sudden-change criterion");
  val_flags.add(*validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (simulate->parsed()) return run_simulate(sim_flags, summary_path);
  return run_validate(val_flags);
}
