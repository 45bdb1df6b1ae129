#include "ddcorr.h"

#include <exception>
#include <new>
#include <string>

#include "ddcorr/correlations.hpp"
#include "ddcorr/decoherence.hpp"
#include "ddcorr/errors.hpp"
#include "ddcorr/evolution.hpp"
#include "ddcorr/sweep.hpp"

struct ddc_config {
  ddcorr::SweepConfig config;
};

struct ddc_sweep {
  ddcorr::SweepResult result;
};

struct ddc_text {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

ddc_status fail(ddc_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Maps the exception in flight onto a status code.
ddc_status translate_exception() {
  try {
    throw;
  } catch (const ddcorr::ConfigError& e) {
    return fail(DDC_ERR_CONFIG, e.what());
  } catch (const ddcorr::DomainError& e) {
    return fail(DDC_ERR_DOMAIN, e.what());
  } catch (const ddcorr::IoError& e) {
    return fail(DDC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DDC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DDC_ERR_INTERNAL, "unknown error");
  }
}

template <class F>
ddc_status guarded(F&& body) {
  try {
    body();
    return DDC_OK;
  } catch (...) {
    return translate_exception();
  }
}

ddc_branch to_c(ddcorr::Branch b) {
  switch (b) {
    case ddcorr::Branch::Q1: return DDC_BRANCH_Q1;
    case ddcorr::Branch::Q2: return DDC_BRANCH_Q2;
    case ddcorr::Branch::Tie: break;
  }
  return DDC_BRANCH_TIE;
}

const char* view(const std::string& s, size_t* size) {
  if (size) *size = s.size();
  return s.c_str();
}

ddcorr::PulseSchedule schedule_from(double interval) {
  return interval > 0.0 ? ddcorr::PulseSchedule::ideal_train(interval) : ddcorr::PulseSchedule::none();
}

}  // namespace

extern "C" {

const char* ddc_version(void) { return "1.0.0"; }

const char* ddc_last_error(void) { return g_last_error.c_str(); }

const char* ddc_status_name(ddc_status status) {
  switch (status) {
    case DDC_OK: return "ok";
    case DDC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DDC_ERR_CONFIG: return "config error";
    case DDC_ERR_DOMAIN: return "domain error";
    case DDC_ERR_IO: return "I/O error";
    case DDC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ddc_preset_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& p : ddcorr::preset_names()) s += (s.empty() ? "" : ",") + p;
    return s;
  }();
  return names.c_str();
}

ddc_status ddc_decoherence(double gamma0, double lambda, double pulse_interval, double t, double* amplitude,
                           double* population) {
  return guarded([&] {
    const auto g = ddcorr::pt_analytic(ddcorr::ReservoirParams(gamma0, lambda), schedule_from(pulse_interval), t);
    if (amplitude) *amplitude = g.g;
    if (population) *population = g.population();
  });
}

ddc_status ddc_decoherence_zeros(double gamma0, double lambda, int n_max, double* times) {
  if (n_max > 0 && !times) return fail(DDC_ERR_INVALID_ARGUMENT, "times must not be NULL");
  return guarded([&] {
    const auto zeros = ddcorr::discord_zero_times(ddcorr::ReservoirParams(gamma0, lambda), n_max);
    for (std::size_t k = 0; k < zeros.size(); ++k) times[k] = zeros[k];
  });
}

ddc_status ddc_bell_diagonal_report(double c1, double c2, double c3, double P, ddc_report* out) {
  if (!out) return fail(DDC_ERR_INVALID_ARGUMENT, "out must not be NULL");
  return guarded([&] {
    const auto r = ddcorr::analyze(ddcorr::evolve_bd(ddcorr::BellDiagonalParams(c1, c2, c3), P));
    *out = ddc_report{r.mutual_info, r.classical, r.discord, r.concurrence, r.q1, r.q2, to_c(*r.branch)};
  });
}

ddc_status ddc_config_create(const char* preset, ddc_config** out) {
  if (!out) return fail(DDC_ERR_INVALID_ARGUMENT, "out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    const std::string name = (preset && *preset) ? preset : "custom";
    *out = new ddc_config{ddcorr::make_preset(name)};
  });
}

ddc_status ddc_config_load_file(const char* path, const char* preset_override, ddc_config** out) {
  if (!out || !path) return fail(DDC_ERR_INVALID_ARGUMENT, "path and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new ddc_config{ddcorr::load_config_file(path, preset_override ? preset_override : "")};
  });
}

void ddc_config_destroy(ddc_config* config) { delete config; }

ddc_status ddc_config_set(ddc_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(DDC_ERR_INVALID_ARGUMENT, "config, key and value must not be NULL");
  return guarded([&] { ddcorr::apply_setting(config->config, key, value); });
}

const char* ddc_config_out(const ddc_config* config) { return config ? config->config.out.c_str() : ""; }

const char* ddc_config_gnuplot(const ddc_config* config) { return config ? config->config.gnuplot.c_str() : ""; }

ddc_status ddc_config_describe(const ddc_config* config, ddc_text** out) {
  if (!config || !out) return fail(DDC_ERR_INVALID_ARGUMENT, "config and out must not be NULL");
  *out = nullptr;
  return guarded([&] { *out = new ddc_text{ddcorr::describe(config->config)}; });
}

ddc_status ddc_validate(const ddc_config* config, ddc_text** out) {
  if (!config || !out) return fail(DDC_ERR_INVALID_ARGUMENT, "config and out must not be NULL");
  *out = nullptr;
  return guarded([&] { *out = new ddc_text{ddcorr::validate(config->config)}; });
}

ddc_status ddc_sweep_run(const ddc_config* config, ddc_sweep** out) {
  if (!config || !out) return fail(DDC_ERR_INVALID_ARGUMENT, "config and out must not be NULL");
  *out = nullptr;
  return guarded([&] { *out = new ddc_sweep{ddcorr::run_sweep(config->config)}; });
}

void ddc_sweep_destroy(ddc_sweep* sweep) { delete sweep; }

const char* ddc_sweep_csv(const ddc_sweep* sweep, size_t* size) {
  static const std::string empty;
  return view(sweep ? sweep->result.csv : empty, size);
}

const char* ddc_sweep_summary(const ddc_sweep* sweep, size_t* size) {
  static const std::string empty;
  return view(sweep ? sweep->result.summary : empty, size);
}

const char* ddc_sweep_gnuplot(const ddc_sweep* sweep, size_t* size) {
  static const std::string empty;
  return view(sweep ? sweep->result.gnuplot : empty, size);
}

const char* ddc_text_data(const ddc_text* text, size_t* size) {
  static const std::string empty;
  return view(text ? text->text : empty, size);
}

void ddc_text_destroy(ddc_text* text) { delete text; }

ddc_status ddc_write_file(const char* path, const char* data, size_t size) {
  if (!path || (!data && size > 0)) return fail(DDC_ERR_INVALID_ARGUMENT, "path and data must not be NULL");
  return guarded([&] { ddcorr::write_text_file(path, std::string_view(data ? data : "", size)); });
}

}  // extern "C"
