/*
 * C interface to the ddcorr library.
 *
 * Two qubits, each in its own zero-temperature Lorentzian reservoir, with an
 * optional ideal bang-bang pi-pulse train. The library evaluates the
 * decoherence function, the correlation measures of the evolved two-qubit
 * state, and whole parameter sweeps rendered as CSV.
 *
 * Every function returns a ddc_status. On failure, ddc_last_error() returns a
 * message for the calling thread that stays valid until its next failing call.
 * Objects returned through out-parameters are owned by the caller and released
 * with the matching *_destroy function; destroy functions accept NULL.
 */

#ifndef DDCORR_H
#define DDCORR_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DDC_BUILDING_LIBRARY)
#    define DDC_API __declspec(dllexport)
#  else
#    define DDC_API __declspec(dllimport)
#  endif
#else
#  define DDC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddc_status {
  DDC_OK = 0,
  DDC_ERR_INVALID_ARGUMENT = 1, /* NULL pointers and similar misuse */
  DDC_ERR_CONFIG = 2,           /* malformed or inconsistent configuration */
  DDC_ERR_DOMAIN = 3,           /* numeric-domain error */
  DDC_ERR_IO = 4,               /* file could not be read or written */
  DDC_ERR_INTERNAL = 5
} ddc_status;

typedef enum ddc_branch { DDC_BRANCH_Q1 = 0, DDC_BRANCH_Q2 = 1, DDC_BRANCH_TIE = 2 } ddc_branch;

typedef struct ddc_report {
  double mutual_info; /* bits */
  double classical;   /* bits */
  double discord;     /* bits, min(q1, q2) */
  double concurrence;
  double q1;
  double q2;
  ddc_branch branch;
} ddc_report;

typedef struct ddc_config ddc_config;
typedef struct ddc_sweep ddc_sweep;
typedef struct ddc_text ddc_text;

DDC_API const char* ddc_version(void);
DDC_API const char* ddc_last_error(void);
DDC_API const char* ddc_status_name(ddc_status status);

/* Comma-separated list of the sweep preset names. */
DDC_API const char* ddc_preset_names(void);

/* ---- numerics ---------------------------------------------------------- */

/* Decoherence amplitude g(t) and P_t = g^2. pulse_interval <= 0 means no
 * pulses. Either output pointer may be NULL. */
DDC_API ddc_status ddc_decoherence(double gamma0, double lambda, double pulse_interval, double t, double* amplitude,
                                   double* population);

/* Writes the first n_max zeros of the pulse-free decoherence function into
 * times[0..n_max). */
DDC_API ddc_status ddc_decoherence_zeros(double gamma0, double lambda, int n_max, double* times);

/* Correlations of the Bell-diagonal state (c1, c2, c3) after both qubits decay
 * with survival value P in [0, 1]. */
DDC_API ddc_status ddc_bell_diagonal_report(double c1, double c2, double c3, double P, ddc_report* out);

/* ---- sweep configuration ----------------------------------------------- */

/* preset may be NULL or "" for "custom". */
DDC_API ddc_status ddc_config_create(const char* preset, ddc_config** out);

/* Parses a key = value file. preset_override, when non-empty, replaces the
 * file's preset key. */
DDC_API ddc_status ddc_config_load_file(const char* path, const char* preset_override, ddc_config** out);
DDC_API void ddc_config_destroy(ddc_config* config);

/* Keys: gamma0, lambda, pulse-T, c, r, r-range, lambda-inv-range,
 * gamma0-inv-range, tmin, tmax, dt, delta-q, out, gnuplot. */
DDC_API ddc_status ddc_config_set(ddc_config* config, const char* key, const char* value);

/* Output path setting ("-" is stdout, interpreted by the caller). */
DDC_API const char* ddc_config_out(const ddc_config* config);
DDC_API const char* ddc_config_gnuplot(const ddc_config* config);

DDC_API ddc_status ddc_config_describe(const ddc_config* config, ddc_text** out);

/* Diagnostics report; configuration problems are reported in the text and do
 * not make the call fail. */
DDC_API ddc_status ddc_validate(const ddc_config* config, ddc_text** out);

/* ---- sweeps ------------------------------------------------------------ */

DDC_API ddc_status ddc_sweep_run(const ddc_config* config, ddc_sweep** out);
DDC_API void ddc_sweep_destroy(ddc_sweep* sweep);
DDC_API const char* ddc_sweep_csv(const ddc_sweep* sweep, size_t* size);
DDC_API const char* ddc_sweep_summary(const ddc_sweep* sweep, size_t* size);
DDC_API const char* ddc_sweep_gnuplot(const ddc_sweep* sweep, size_t* size);

/* ---- text and files ---------------------------------------------------- */

DDC_API const char* ddc_text_data(const ddc_text* text, size_t* size);
DDC_API void ddc_text_destroy(ddc_text* text);

DDC_API ddc_status ddc_write_file(const char* path, const char* data, size_t size);

#ifdef __cplusplus
}
#endif

#endif /* DDCORR_H */
