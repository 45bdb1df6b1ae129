#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ddcorr/errors.hpp"
#include "ddcorr/sweep.hpp"

using namespace ddcorr;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) { return std::string(DDC_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("ranges") {
  const auto v = Range{0.0, 1.0, 0.25}.values();
  REQUIRE(v.size() == 5);
  CHECK(v.back() == doctest::Approx(1.0));
  CHECK(Range{0.01, 1.0, 0.01}.values().size() == 100);
  CHECK(Range{1.0, 20.0, 0.5}.values().size() == 39);
}

TEST_CASE("presets") {
  const auto names = preset_names();
  const std::set<std::string> have(names.begin(), names.end());
  for (const char* p : {"fig1a", "fig1b", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7a", "fig7b", "custom"})
    CHECK(have.count(p) == 1);

  CHECK(make_preset("fig1b").c.value()[2] == doctest::Approx(0.8));
  CHECK(make_preset("fig2").pulse_intervals.size() == 4);
  CHECK(make_preset("fig5").r.value() == doctest::Approx(0.5));
  CHECK(make_preset("fig6").pulse_intervals.size() == 101);
  CHECK(make_preset("fig7a").delta_q);
  CHECK(make_preset("fig7a").lambda_inv_range.has_value());
  CHECK(make_preset("fig7b").gamma0_inv_range.has_value());
  try {
    make_preset("fig9");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("fig1a") != std::string::npos);
  }
}

TEST_CASE("settings") {
  auto cfg = make_preset("custom");
  apply_setting(cfg, "pulse-T", "none,0.4,0.1:0.3:0.1");
  REQUIRE(cfg.pulse_intervals.size() == 5);
  CHECK(!cfg.pulse_intervals[0].has_value());
  CHECK(cfg.pulse_intervals[4].value() == doctest::Approx(0.3));
  apply_setting(cfg, "tmax", "5");
  apply_setting(cfg, "delta_q", "true");
  CHECK(cfg.delta_q);
  CHECK_THROWS_AS(apply_setting(cfg, "dt", "abc"), ConfigError);
  auto negative_dt = cfg;
  apply_setting(negative_dt, "dt", "-1");
  CHECK_THROWS_AS(check_config(negative_dt), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "nonsense", "1"), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "c", "1,2"), ConfigError);
  auto zero_T = cfg;
  apply_setting(zero_T, "pulse-T", "0");
  CHECK_THROWS_AS(check_config(zero_T), ConfigError);
  apply_setting(cfg, "r", "0.5");
  CHECK(cfg.r.has_value());
  CHECK(!cfg.c.has_value());
  auto both = make_preset("custom");
  apply_setting(both, "c", "0,0,0");
  apply_setting(both, "r", "0.5");
  CHECK_THROWS_AS(check_config(both), ConfigError);
}

TEST_CASE("config files") {
  const std::string path = temp_path("unit.cfg");
  {
    std::ofstream f(path);
    f << "# comment\npreset = fig5\n\ntmax = 2  # trailing\ndt=0.5\n";
  }
  const auto cfg = load_config_file(path);
  CHECK(cfg.preset == "fig5");
  CHECK(cfg.t_end == doctest::Approx(2.0));
  CHECK(cfg.dt == doctest::Approx(0.5));
  CHECK(cfg.r.value() == doctest::Approx(0.5));

  const auto overridden = load_config_file(path, "fig1a");
  CHECK(overridden.preset == "fig1a");
  CHECK(overridden.c.has_value());
  CHECK(overridden.t_end == doctest::Approx(2.0));

  {
    std::ofstream f(path);
    f << "tmax = 2\nbroken line\n";
  }
  try {
    load_config_file(path);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("unit.cfg:2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config_file(temp_path("missing.cfg")), IoError);
  std::remove(path.c_str());
}

TEST_CASE("CSV layout") {
  auto cfg = make_preset("fig2");
  apply_setting(cfg, "tmax", "1");
  apply_setting(cfg, "dt", "0.5");
  const auto result = run_sweep(cfg);
  const auto lines = lines_of(result.csv);
  REQUIRE(lines.size() == 2 + 4 * 3);
  CHECK(lines[0].rfind("# ddcorr simulate preset=fig2", 0) == 0);
  CHECK(lines[1] == "t,T,P,I,C,Q,branch,C_E,Q1,Q2");
  CHECK(lines[2].rfind("0,none,1,", 0) == 0);
  CHECK(lines[5].rfind("0,0.4,1,", 0) == 0);
  CHECK(result.summary.find("sudden_changes") != std::string::npos);
  CHECK(result.gnuplot.find("plot") != std::string::npos);

  auto werner = make_preset("fig3");
  apply_setting(werner, "tmax", "0.1");
  apply_setting(werner, "r-range", "0:1:0.5");
  const auto wl = lines_of(run_sweep(werner).csv);
  CHECK(wl[1] == "t,r,P,I,C,Q,branch,C_E,Q1,Q2");

  auto dq = make_preset("fig7a");
  apply_setting(dq, "tmax", "0.1");
  apply_setting(dq, "lambda-inv-range", "5:20:15");
  const auto dl = lines_of(run_sweep(dq).csv);
  CHECK(dl[1] == "t,T,r,lambda_inv,P,I,C,Q,branch,C_E,Q1,Q2,dQ");
}

TEST_CASE("sweep output is deterministic") {
  auto cfg = make_preset("fig6");
  apply_setting(cfg, "tmax", "2");
  const auto a = run_sweep(cfg);
  const auto b = run_sweep(cfg);
  CHECK(a.csv == b.csv);
  CHECK(a.summary == b.summary);
}

TEST_CASE("validate report") {
  auto cfg = make_preset("fig1a");
  const auto text = validate(cfg);
  CHECK(text.find("non-Markovian (γ₀ > λ/2)") != std::string::npos);
  CHECK(text.find("8.242") != std::string::npos);
  CHECK(text.find("sudden change expected: |c₃| > max(|c₁|,|c₂|)") != std::string::npos);

  const auto b = validate(make_preset("fig1b"));
  CHECK(b.find("no sudden change expected") != std::string::npos);

  auto markov = make_preset("custom");
  apply_setting(markov, "gamma0", "0.01");
  CHECK(validate(markov).find("Markovian (γ₀ < λ/2)") != std::string::npos);

  auto bad = make_preset("custom");
  apply_setting(bad, "c", "0,0,0");
  apply_setting(bad, "r", "0.5");
  CHECK(validate(bad).find("config error") != std::string::npos);
}

TEST_CASE("write_text_file") {
  const std::string path = temp_path("write.txt");
  write_text_file(path, "abc\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "abc\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_text_file(temp_path("no/such/dir/x.txt"), "x"), IoError);
}
