// Parameter sweeps over trajectories, CSV emission and the
// figure presets used by the command-line driver.

#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ddcorr {

// Inclusive arithmetic range start, start + step, ..., <= stop (1e-9 slack).
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
  std::vector<double> values() const;
};

struct SweepConfig {
  std::string preset = "custom";
  double gamma0 = 1.0;
  double lambda = 0.1;
  // One series per entry; nullopt is the pulse-free series.
  std::vector<std::optional<double>> pulse_intervals{std::nullopt};
  // Initial state: a Bell-diagonal triple, a Werner r, or a Werner r range.
  std::optional<std::array<double, 3>> c{std::array<double, 3>{0.9, -0.9, 1.0}};
  std::optional<double> r;
  std::optional<Range> r_range;
  std::optional<Range> lambda_inv_range;
  std::optional<Range> gamma0_inv_range;
  double t_start = 0.0;
  double t_end = 20.0;
  double dt = 0.01;
  bool delta_q = false;  // append dQ = Q(0) - Q(t)
  std::string out = "-";
  std::string gnuplot;  // optional path for a plotting stub

  // State keys (c, r, r-range) given explicitly rather than by a preset.
  std::set<std::string> explicit_state_keys;
};

std::vector<std::string> preset_names();

// Throws ConfigError naming the available presets for an unknown name.
SweepConfig make_preset(std::string_view name);

// Keys: gamma0, lambda, pulse-T, c, r, r-range, lambda-inv-range,
// gamma0-inv-range, tmin, tmax, dt, delta-q, out, gnuplot. Underscores are
// accepted in place of dashes. pulse-T is a comma list whose items are numbers,
// "none" or start:stop:step ranges.
void apply_setting(SweepConfig& config, std::string_view key, std::string_view value);

// key = value lines, '#' comments. The preset key selects the base
// configuration (unless preset_override is non-empty) and the remaining keys
// are applied on top of it in file order.
SweepConfig load_config_file(const std::string& path, std::string_view preset_override = {});

// Throws ConfigError on inconsistent settings.
void check_config(const SweepConfig& config);

// Canonical one-line key=value rendering, used in the CSV header.
std::string describe(const SweepConfig& config);

// Human-readable diagnostics: reservoir regime, predicted first zero of P_t,
// and whether the initial state is expected to show a sudden change. Never
// throws for bad configurations; problems are reported in the text.
std::string validate(const SweepConfig& config);

struct SweepResult {
  std::string csv;
  std::string summary;
  std::string gnuplot;
};

SweepResult run_sweep(const SweepConfig& config);

// Writes `content` to `path`; throws IoError with the path on failure.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace ddcorr
