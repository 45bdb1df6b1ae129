#include "ddcorr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "ddcorr/decoherence.hpp"
#include "ddcorr/detect.hpp"
#include "ddcorr/errors.hpp"
#include "ddcorr/evolution.hpp"

namespace ddcorr {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

double parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v))
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(text) + "'");
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(text) + "'");
}

Range parse_range(std::string_view key, std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError(std::string(key) + ": expected start:stop:step, got '" + std::string(text) + "'");
  Range r{parse_number(key, parts[0]), parse_number(key, parts[1]), parse_number(key, parts[2])};
  if (!(r.step > 0.0)) throw ConfigError(std::string(key) + ": range step must be positive");
  if (r.stop < r.start) throw ConfigError(std::string(key) + ": range stop precedes start");
  return r;
}

std::string range_text(const Range& r) { return num(r.start) + ":" + num(r.stop) + ":" + num(r.step); }

std::vector<std::optional<double>> parse_pulses(std::string_view key, std::string_view text) {
  std::vector<std::optional<double>> out;
  for (auto item : split(text, ',')) {
    if (item == "none" || item == "off") {
      out.emplace_back(std::nullopt);
    } else if (item.find(':') != std::string_view::npos) {
      for (double v : parse_range(key, item).values()) out.emplace_back(v);
    } else {
      out.emplace_back(parse_number(key, item));
    }
  }
  if (out.empty()) throw ConfigError(std::string(key) + ": empty pulse list");
  return out;
}

std::string pulse_text(const std::optional<double>& T) { return T ? num(*T) : std::string("none"); }

std::string normalize_key(std::string_view key) {
  std::string k(trim(key));
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

// One trajectory in the sweep.
struct Series {
  std::optional<double> pulse;
  std::optional<double> r;
  std::optional<double> lambda_inv;
  std::optional<double> gamma0_inv;
  double gamma0;
  double lambda;
  std::array<double, 3> c;
};

struct Columns {
  bool pulse = false;
  bool r = false;
  bool lambda_inv = false;
  bool gamma0_inv = false;
  bool delta_q = false;
};

Columns columns_for(const SweepConfig& cfg) {
  Columns c;
  c.pulse = std::any_of(cfg.pulse_intervals.begin(), cfg.pulse_intervals.end(), [](const auto& T) { return T.has_value(); }) ||
            cfg.pulse_intervals.size() > 1;
  c.r = cfg.r.has_value() || cfg.r_range.has_value();
  c.lambda_inv = cfg.lambda_inv_range.has_value();
  c.gamma0_inv = cfg.gamma0_inv_range.has_value();
  c.delta_q = cfg.delta_q;
  return c;
}

std::vector<Series> expand(const SweepConfig& cfg) {
  std::vector<std::optional<double>> rs;
  if (cfg.r_range) {
    for (double v : cfg.r_range->values()) rs.emplace_back(v);
  } else {
    rs.emplace_back(cfg.r);
  }
  std::vector<std::optional<double>> lambda_invs{std::nullopt};
  if (cfg.lambda_inv_range) {
    lambda_invs.clear();
    for (double v : cfg.lambda_inv_range->values()) lambda_invs.emplace_back(v);
  }
  std::vector<std::optional<double>> gamma0_invs{std::nullopt};
  if (cfg.gamma0_inv_range) {
    gamma0_invs.clear();
    for (double v : cfg.gamma0_inv_range->values()) gamma0_invs.emplace_back(v);
  }

  std::vector<Series> out;
  for (const auto& T : cfg.pulse_intervals)
    for (const auto& r : rs)
      for (const auto& li : lambda_invs)
        for (const auto& gi : gamma0_invs) {
          Series s{T, r, li, gi, gi ? 1.0 / *gi : cfg.gamma0, li ? 1.0 / *li : cfg.lambda, {}};
          s.c = r ? std::array<double, 3>{-*r, -*r, -*r} : *cfg.c;
          out.push_back(s);
        }
  return out;
}

std::string series_label(const Series& s) {
  std::string label = "T=" + pulse_text(s.pulse);
  if (s.r) label += " r=" + num(*s.r);
  else label += " c=(" + num(s.c[0]) + "," + num(s.c[1]) + "," + num(s.c[2]) + ")";
  label += " gamma0=" + num(s.gamma0) + " lambda=" + num(s.lambda);
  return label;
}

std::string join_times(const std::vector<double>& ts) {
  if (ts.empty()) return "none";
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) out += (k ? ", " : "") + num(ts[k]);
  return out;
}

struct SeriesOutput {
  std::string rows;
  std::string summary;
};

SeriesOutput run_series(const SweepConfig& cfg, const Columns& cols, const Series& s, std::size_t index) {
  const ReservoirParams reservoir(s.gamma0, s.lambda);
  const PulseSchedule schedule = s.pulse ? PulseSchedule::ideal_train(*s.pulse) : PulseSchedule::none();
  const TrajectoryMeta meta{reservoir, schedule, BellDiagonalParams(s.c[0], s.c[1], s.c[2])};
  const Trajectory traj = make_trajectory(meta, cfg.t_start, cfg.t_end, cfg.dt);

  double q_initial = 0.0;
  if (cols.delta_q) {
    const AnalyticDecoherence deco(reservoir, schedule);
    q_initial = evaluate_point(deco, meta.initial, 0.0).report.discord;
  }

  SeriesOutput out;
  std::string& rows = out.rows;
  rows.reserve(traj.size() * 160);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const CorrelationReport& rep = traj.reports()[k];
    const double g = traj.amplitudes()[k];
    rows += num(traj.times()[k]);
    if (cols.pulse) rows += "," + pulse_text(s.pulse);
    if (cols.r) rows += "," + num(s.r.value_or(0.0));
    if (cols.lambda_inv) rows += "," + num(*s.lambda_inv);
    if (cols.gamma0_inv) rows += "," + num(*s.gamma0_inv);
    rows += "," + num(std::min(g * g, 1.0));
    rows += "," + num(rep.mutual_info);
    rows += "," + num(rep.classical);
    rows += "," + num(rep.discord);
    rows += ",";
    rows += to_string(*rep.branch);
    rows += "," + num(rep.concurrence);
    rows += "," + num(rep.q1);
    rows += "," + num(rep.q2);
    if (cols.delta_q) rows += "," + num(q_initial - rep.discord);
    rows += "\n";
  }

  const EventList events = detect_events(traj);
  std::ostringstream sum;
  sum << "series " << index + 1 << ": " << series_label(s) << " regime=" << to_string(reservoir.regime()) << "\n";
  sum << "  sudden_changes: " << join_times(events.sudden_changes) << "\n";
  sum << "  esd: ";
  if (events.esd.identically_zero) sum << "none (concurrence identically zero)";
  else if (events.esd.time) sum << num(*events.esd.time);
  else sum << "none in window";
  sum << "\n";
  sum << "  discord_zeros: " << join_times(events.discord_zeros) << "\n";
  out.summary = sum.str();
  return out;
}

std::string header_row(const Columns& cols) {
  std::string h = "t";
  if (cols.pulse) h += ",T";
  if (cols.r) h += ",r";
  if (cols.lambda_inv) h += ",lambda_inv";
  if (cols.gamma0_inv) h += ",gamma0_inv";
  h += ",P,I,C,Q,branch,C_E,Q1,Q2";
  if (cols.delta_q) h += ",dQ";
  return h + "\n";
}

std::string gnuplot_stub(const SweepConfig& cfg, const Columns& cols) {
  const std::string data = cfg.out == "-" ? std::string("data.csv") : cfg.out;
  const std::string z = cols.delta_q ? "dQ" : "Q";
  std::ostringstream g;
  g << "# gnuplot stub for preset " << cfg.preset << "\n";
  g << "set datafile separator ','\n";
  g << "set datafile commentschars '#'\n";
  g << "set xlabel 't'\n";
  std::string y;
  if (cols.r) y = "r";
  if (cols.lambda_inv) y = "lambda_inv";
  if (cols.gamma0_inv) y = "gamma0_inv";
  if (cols.pulse && cfg.pulse_intervals.size() > 8) y = "T";
  if (!y.empty()) {
    g << "set ylabel '" << y << "'\nset zlabel '" << z << "'\n";
    g << "splot '" << data << "' using 't':(valid('" << y << "') ? column('" << y << "') : NaN):'" << z
      << "' with dots notitle\n";
  } else if (cols.pulse) {
    g << "set ylabel '" << z << "'\n";
    g << "series = \"";
    for (std::size_t k = 0; k < cfg.pulse_intervals.size(); ++k) g << (k ? " " : "") << pulse_text(cfg.pulse_intervals[k]);
    g << "\"\n";
    g << "plot for [T in series] '" << data << "' using 't':(strcol('T') eq T ? column('" << z
      << "') : NaN) with lines title 'T='.T\n";
  } else {
    g << "set ylabel 'discord'\n";
    g << "plot '" << data << "' using 't':'Q1' with lines title 'Q1', '' using 't':'Q2' with lines dt 2 title 'Q2'\n";
  }
  return g.str();
}

}  // namespace

std::vector<double> Range::values() const {
  std::vector<double> v;
  const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
  for (long long k = 0; k <= n; ++k) v.push_back(start + static_cast<double>(k) * step);
  return v;
}

std::vector<std::string> preset_names() {
  return {"custom", "fig1a", "fig1b", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7a", "fig7b"};
}

SweepConfig make_preset(std::string_view name) {
  SweepConfig cfg;
  cfg.preset = std::string(name);
  auto werner = [&cfg](double r) {
    cfg.c.reset();
    cfg.r = r;
  };
  if (name == "custom" || name == "fig1a") {
  } else if (name == "fig1b") {
    cfg.c = {0.9, -0.9, 0.8};
  } else if (name == "fig2") {
    cfg.pulse_intervals = {std::nullopt, 0.4, 0.2, 0.1};
  } else if (name == "fig3") {
    cfg.c.reset();
    cfg.r_range = Range{0.0, 1.0, 0.02};
    cfg.t_end = 30.0;
    cfg.dt = 0.05;
  } else if (name == "fig4") {
    werner(1.0);
    cfg.pulse_intervals = {std::nullopt, 0.6, 0.2, 0.01};
  } else if (name == "fig5") {
    werner(0.5);
    cfg.pulse_intervals = {0.6, 0.2, 0.01, std::nullopt};
    cfg.t_end = 30.0;
  } else if (name == "fig6") {
    werner(1.0);
    cfg.pulse_intervals = {std::nullopt};
    for (double T : Range{0.01, 1.0, 0.01}.values()) cfg.pulse_intervals.emplace_back(T);
    cfg.dt = 0.05;
  } else if (name == "fig7a") {
    werner(1.0);
    cfg.pulse_intervals = {0.01};
    cfg.lambda_inv_range = Range{1.0, 20.0, 0.5};
    cfg.dt = 0.05;
    cfg.delta_q = true;
  } else if (name == "fig7b") {
    werner(1.0);
    cfg.pulse_intervals = {0.01};
    cfg.gamma0_inv_range = Range{1.0, 20.0, 0.5};
    cfg.dt = 0.05;
    cfg.delta_q = true;
  } else {
    std::string list;
    for (const auto& p : preset_names()) list += (list.empty() ? "" : ", ") + p;
    throw ConfigError("unknown preset '" + std::string(name) + "'; available presets: " + list);
  }
  return cfg;
}

void apply_setting(SweepConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view value = trim(raw_value);
  if (key == "gamma0") {
    cfg.gamma0 = parse_number(key, value);
  } else if (key == "lambda") {
    cfg.lambda = parse_number(key, value);
  } else if (key == "pulse-T" || key == "pulse-t") {
    cfg.pulse_intervals = parse_pulses(key, value);
  } else if (key == "c") {
    const auto parts = split(value, ',');
    if (parts.size() != 3) throw ConfigError("c: expected c1,c2,c3");
    cfg.c = {parse_number(key, parts[0]), parse_number(key, parts[1]), parse_number(key, parts[2])};
    cfg.r.reset();
    cfg.r_range.reset();
    cfg.explicit_state_keys.insert("c");
  } else if (key == "r") {
    cfg.r = parse_number(key, value);
    cfg.c.reset();
    cfg.r_range.reset();
    cfg.explicit_state_keys.insert("r");
  } else if (key == "r-range") {
    cfg.r_range = parse_range(key, value);
    cfg.c.reset();
    cfg.r.reset();
    cfg.explicit_state_keys.insert("r-range");
  } else if (key == "lambda-inv-range") {
    cfg.lambda_inv_range = parse_range(key, value);
  } else if (key == "gamma0-inv-range") {
    cfg.gamma0_inv_range = parse_range(key, value);
  } else if (key == "tmin") {
    cfg.t_start = parse_number(key, value);
  } else if (key == "tmax") {
    cfg.t_end = parse_number(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_number(key, value);
  } else if (key == "delta-q") {
    cfg.delta_q = parse_bool(key, value);
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "gnuplot") {
    cfg.gnuplot = std::string(value);
  } else if (key == "preset") {
    throw ConfigError("preset must be chosen when the configuration is created");
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

SweepConfig load_config_file(const std::string& path, std::string_view preset_override) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");

  std::vector<std::pair<std::string, std::string>> entries;
  std::string preset = preset_override.empty() ? std::string("custom") : std::string(preset_override);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string_view content = trim(std::string_view(line).substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = normalize_key(content.substr(0, eq));
    const std::string value(trim(content.substr(eq + 1)));
    if (key == "preset") {
      if (preset_override.empty()) preset = value;
      continue;
    }
    entries.emplace_back(key, value);
  }
  if (in.bad()) throw IoError("error reading config file '" + path + "'");

  SweepConfig cfg = make_preset(preset);
  for (const auto& [key, value] : entries) {
    try {
      apply_setting(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
  return cfg;
}

void check_config(const SweepConfig& cfg) {
  if (cfg.explicit_state_keys.size() > 1)
    throw ConfigError("specify at most one initial state: c, r or r-range");
  if (!cfg.c && !cfg.r && !cfg.r_range) throw ConfigError("no initial state given");
  if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(cfg.t_start >= 0.0)) throw ConfigError("tmin must be >= 0");
  if (!(cfg.t_end >= cfg.t_start)) throw ConfigError("tmax must be >= tmin");
  if (cfg.pulse_intervals.empty()) throw ConfigError("pulse-T list is empty");
  for (const auto& T : cfg.pulse_intervals)
    if (T && !(*T > 0.0)) throw ConfigError("pulse intervals must be positive");
  if (cfg.lambda_inv_range && !(cfg.lambda_inv_range->start > 0.0))
    throw ConfigError("lambda-inv-range must be positive");
  if (cfg.gamma0_inv_range && !(cfg.gamma0_inv_range->start > 0.0))
    throw ConfigError("gamma0-inv-range must be positive");
}

std::string describe(const SweepConfig& cfg) {
  std::string s = "preset=" + cfg.preset;
  s += " gamma0=" + num(cfg.gamma0) + " lambda=" + num(cfg.lambda);
  s += " pulse-T=";
  for (std::size_t k = 0; k < cfg.pulse_intervals.size(); ++k) s += (k ? "," : "") + pulse_text(cfg.pulse_intervals[k]);
  if (cfg.c) s += " c=" + num((*cfg.c)[0]) + "," + num((*cfg.c)[1]) + "," + num((*cfg.c)[2]);
  if (cfg.r) s += " r=" + num(*cfg.r);
  if (cfg.r_range) s += " r-range=" + range_text(*cfg.r_range);
  if (cfg.lambda_inv_range) s += " lambda-inv-range=" + range_text(*cfg.lambda_inv_range);
  if (cfg.gamma0_inv_range) s += " gamma0-inv-range=" + range_text(*cfg.gamma0_inv_range);
  s += " tmin=" + num(cfg.t_start) + " tmax=" + num(cfg.t_end) + " dt=" + num(cfg.dt);
  s += std::string(" delta-q=") + (cfg.delta_q ? "true" : "false");
  return s;
}

std::string validate(const SweepConfig& cfg) {
  std::ostringstream out;
  out << "config: " << describe(cfg) << "\n";
  try {
    check_config(cfg);
  } catch (const std::exception& e) {
    out << "config error: " << e.what() << "\n";
    return out.str();
  }

  std::vector<std::pair<double, double>> reservoirs;
  for (const auto& s : expand(cfg))
    if (std::find(reservoirs.begin(), reservoirs.end(), std::make_pair(s.gamma0, s.lambda)) == reservoirs.end())
      reservoirs.emplace_back(s.gamma0, s.lambda);

  for (const auto& [gamma0, lambda] : reservoirs) {
    out << "reservoir gamma0=" << num(gamma0) << " lambda=" << num(lambda) << ": ";
    try {
      const ReservoirParams p(gamma0, lambda);
      switch (p.regime()) {
        case Regime::NonMarkovian:
          out << "non-Markovian (γ₀ > λ/2); predicted t₀ = " << num(discord_zero_times(p, 1).front()) << "\n";
          break;
        case Regime::Markovian:
          out << "Markovian (γ₀ < λ/2); no zeros of P_t\n";
          break;
        case Regime::Boundary:
          out << "boundary (γ₀ = λ/2); no zeros of P_t\n";
          break;
      }
    } catch (const std::exception& e) {
      out << "invalid: " << e.what() << "\n";
    }
  }

  out << "pulses: ";
  for (std::size_t k = 0; k < cfg.pulse_intervals.size(); ++k) {
    const auto& T = cfg.pulse_intervals[k];
    out << (k ? ", " : "") << (T ? "T=" + num(*T) : std::string("none"));
    if (T && !(*T > 0.0)) out << " (invalid: T must be positive)";
  }
  out << "\n";

  std::vector<std::array<double, 3>> states;
  if (cfg.c) states.push_back(*cfg.c);
  if (cfg.r) states.push_back({-*cfg.r, -*cfg.r, -*cfg.r});
  if (cfg.r_range)
    for (double r : cfg.r_range->values()) states.push_back({-r, -r, -r});
  bool any_expected = false;
  bool any_valid = false;
  for (const auto& c : states) {
    try {
      BellDiagonalParams(c[0], c[1], c[2]);
    } catch (const std::exception& e) {
      out << "initial state (" << num(c[0]) << "," << num(c[1]) << "," << num(c[2]) << ") invalid: " << e.what()
          << "\n";
      continue;
    }
    any_valid = true;
    if (std::abs(c[2]) > std::max(std::abs(c[0]), std::abs(c[1]))) any_expected = true;
  }
  if (any_expected)
    out << "sudden change expected: |c₃| > max(|c₁|,|c₂|)\n";
  else if (any_valid)
    out << "no sudden change expected: |c₃| ≤ max(|c₁|,|c₂|)\n";
  return out.str();
}

SweepResult run_sweep(const SweepConfig& cfg) {
  check_config(cfg);
  const Columns cols = columns_for(cfg);
  const std::vector<Series> series = expand(cfg);

  std::vector<SeriesOutput> outputs(series.size());
  std::vector<std::exception_ptr> errors(series.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < series.size(); i = next++) {
      try {
        outputs[i] = run_series(cfg, cols, series[i], i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(series.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepResult result;
  result.csv = "# ddcorr simulate " + describe(cfg) + "\n" + header_row(cols);
  result.summary = "# events for " + describe(cfg) + "\n";
  for (const auto& o : outputs) {
    result.csv += o.rows;
    result.summary += o.summary;
  }
  result.gnuplot = gnuplot_stub(cfg, cols);
  return result;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace ddcorr
