#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <thread>

#include "ddcorr.h"

namespace {

std::string text_of(ddc_text* t) {
  size_t n = 0;
  const char* data = ddc_text_data(t, &n);
  return std::string(data, n);
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ddc_version()) == "1.0.0");
  CHECK(std::string(ddc_status_name(DDC_ERR_DOMAIN)) == "domain error");
  CHECK(std::string(ddc_preset_names()).find("fig7b") != std::string::npos);
}

TEST_CASE("decoherence through the C surface") {
  double g = 0, P = 0;
  REQUIRE(ddc_decoherence(1.0, 0.1, 0.0, 2.0, &g, &P) == DDC_OK);
  CHECK(P == doctest::Approx(0.82423850450312).epsilon(1e-12));
  CHECK(g * g == doctest::Approx(P));
  REQUIRE(ddc_decoherence(1.0, 0.1, 0.4, 5.0, nullptr, &P) == DDC_OK);
  CHECK(P == doctest::Approx(0.997361528619544).epsilon(1e-11));

  CHECK(ddc_decoherence(-1.0, 0.1, 0.0, 2.0, &g, &P) == DDC_ERR_DOMAIN);
  CHECK(std::string(ddc_last_error()).size() > 0);
  CHECK(ddc_decoherence(1.0, 0.1, 0.0, -2.0, &g, &P) == DDC_ERR_DOMAIN);

  double zeros[3];
  REQUIRE(ddc_decoherence_zeros(1.0, 0.1, 3, zeros) == DDC_OK);
  CHECK(zeros[0] == doctest::Approx(8.242034311692072));
  CHECK(zeros[2] - zeros[1] == doctest::Approx(zeros[1] - zeros[0]));
  CHECK(ddc_decoherence_zeros(0.01, 0.1, 3, zeros) == DDC_ERR_DOMAIN);
  CHECK(ddc_decoherence_zeros(1.0, 0.1, 3, nullptr) == DDC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("Bell-diagonal reports") {
  ddc_report r{};
  REQUIRE(ddc_bell_diagonal_report(1, -1, 1, 1.0, &r) == DDC_OK);
  CHECK(r.mutual_info == doctest::Approx(2.0));
  CHECK(r.discord == doctest::Approx(1.0));
  CHECK(r.concurrence == doctest::Approx(1.0));
  REQUIRE(ddc_bell_diagonal_report(0.9, -0.9, 1.0, 1.0, &r) == DDC_OK);
  CHECK(r.branch == DDC_BRANCH_Q1);
  CHECK(ddc_bell_diagonal_report(1, 1, 1, 1.0, &r) == DDC_ERR_DOMAIN);
  CHECK(ddc_bell_diagonal_report(0, 0, 0, 2.0, &r) == DDC_ERR_DOMAIN);
  CHECK(ddc_bell_diagonal_report(0, 0, 0, 1.0, nullptr) == DDC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config lifecycle and sweep") {
  ddc_config* cfg = nullptr;
  CHECK(ddc_config_create("fig9", &cfg) == DDC_ERR_CONFIG);
  CHECK(cfg == nullptr);
  CHECK(std::string(ddc_last_error()).find("fig1a") != std::string::npos);

  REQUIRE(ddc_config_create("fig1a", &cfg) == DDC_OK);
  CHECK(ddc_config_set(cfg, "tmax", "1") == DDC_OK);
  CHECK(ddc_config_set(cfg, "dt", "0.25") == DDC_OK);
  CHECK(ddc_config_set(cfg, "bogus", "1") == DDC_ERR_CONFIG);
  CHECK(ddc_config_set(cfg, nullptr, "1") == DDC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ddc_config_out(cfg)) == "-");

  ddc_text* desc = nullptr;
  REQUIRE(ddc_config_describe(cfg, &desc) == DDC_OK);
  CHECK(text_of(desc).find("tmax=1 dt=0.25") != std::string::npos);
  ddc_text_destroy(desc);

  ddc_text* report = nullptr;
  REQUIRE(ddc_validate(cfg, &report) == DDC_OK);
  CHECK(text_of(report).find("sudden change expected") != std::string::npos);
  ddc_text_destroy(report);

  ddc_sweep* sweep = nullptr;
  REQUIRE(ddc_sweep_run(cfg, &sweep) == DDC_OK);
  size_t n = 0;
  const char* csv_data = ddc_sweep_csv(sweep, &n);
  const std::string csv(csv_data, n);
  CHECK(csv.find("t,P,I,C,Q,branch,C_E,Q1,Q2\n") != std::string::npos);
  const char* summary_data = ddc_sweep_summary(sweep, &n);
  CHECK(std::string(summary_data, n).find("series 1") != std::string::npos);
  CHECK(ddc_sweep_gnuplot(sweep, &n) != nullptr);
  ddc_sweep_destroy(sweep);

  CHECK(ddc_config_set(cfg, "c", "1,1,1") == DDC_OK);
  sweep = nullptr;
  CHECK(ddc_sweep_run(cfg, &sweep) == DDC_ERR_DOMAIN);
  CHECK(sweep == nullptr);
  ddc_config_destroy(cfg);

  ddc_config_destroy(nullptr);
  ddc_sweep_destroy(nullptr);
  ddc_text_destroy(nullptr);
  CHECK(ddc_sweep_csv(nullptr, &n) != nullptr);
  CHECK(n == 0);
}

TEST_CASE("config files and writing") {
  const std::string dir = DDC_TEST_DATA_DIR;
  const std::string cfg_path = dir + "/capi.cfg";
  const std::string body = "preset = fig4\ntmax = 0.5\n";
  REQUIRE(ddc_write_file(cfg_path.c_str(), body.data(), body.size()) == DDC_OK);

  ddc_config* cfg = nullptr;
  REQUIRE(ddc_config_load_file(cfg_path.c_str(), "", &cfg) == DDC_OK);
  ddc_text* desc = nullptr;
  REQUIRE(ddc_config_describe(cfg, &desc) == DDC_OK);
  CHECK(text_of(desc).find("preset=fig4") != std::string::npos);
  ddc_text_destroy(desc);
  ddc_config_destroy(cfg);

  CHECK(ddc_config_load_file((dir + "/absent.cfg").c_str(), "", &cfg) == DDC_ERR_IO);
  CHECK(ddc_write_file((dir + "/no/dir/x").c_str(), "x", 1) == DDC_ERR_IO);
  CHECK(std::string(ddc_last_error()).find("no/dir/x") != std::string::npos);
  std::remove(cfg_path.c_str());
}

TEST_CASE("last error is per thread") {
  double P = 0;
  CHECK(ddc_decoherence(-1.0, 0.1, 0.0, 1.0, nullptr, &P) == DDC_ERR_DOMAIN);
  const std::string mine = ddc_last_error();
  std::thread other([] {
    ddc_config* cfg = nullptr;
    ddc_config_create("nope", &cfg);
  });
  other.join();
  CHECK(std::string(ddc_last_error()) == mine);
}
