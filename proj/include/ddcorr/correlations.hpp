// Entropic correlation measures and concurrence of
// two-qubit states. All logarithms are base 2; results are in bits.

#pragma once

#include <array>
#include <optional>
#include <span>

#include "ddcorr/evolution.hpp"
#include "ddcorr/linalg.hpp"

namespace ddcorr {

// Eigenvalues at or below this are treated as exact zeros in x log x.
inline constexpr double kEntropyCutoff = 1e-15;
// |Q1 - Q2| at or below this is reported as a tie.
inline constexpr double kBranchTieTol = 1e-12;

enum class Branch { Q1, Q2, Tie };

const char* to_string(Branch branch) noexcept;

// -sum p log2 p over a spectrum, with 0 log 0 := 0. Entries below -1e-10 are
// rejected as a non-PSD input.
double shannon_entropy(std::span<const double> probabilities);

double von_neumann_entropy(const Matrix2& rho);
double von_neumann_entropy(const TwoQubitState& rho);  // Jacobi spectrum
double von_neumann_entropy(const XState& x);           // block-analytic spectrum

// Spectrum of an X state from its two 2x2 blocks, ascending.
std::array<double, 4> x_state_spectrum(const XState& x);

double mutual_information(const TwoQubitState& rho);
double mutual_information(const XState& x);

struct DiscordValue {
  double q = 0.0;   // min(q1, q2)
  double q1 = 0.0;  // sigma_z measurement branch
  double q2 = 0.0;  // sigma_x measurement branch
  Branch branch = Branch::Tie;
};

// Closed-form discord of an X state with equal middle populations.
DiscordValue discord_x_closed(const XState& x);

// Projective measurement along the Bloch axis (theta, phi) on qubit B.
struct MeasurementBasis {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

// S(rho_A) - sum_k p_k S(rho_{A|k}) for a measurement on B.
double measured_information(const TwoQubitState& rho, const MeasurementBasis& basis);

struct MeasurementOptimum {
  double value = 0.0;
  MeasurementBasis basis;
};

// Brute-force maximization of measured_information: a (grid_n + 1) x grid_n
// grid with theta_i = pi i/grid_n and phi_j = 2 pi j/grid_n, then alternating
// golden-section searches around the best grid point. Grids for grid_n and
// 2 grid_n are nested. Requires grid_n >= 64.
MeasurementOptimum optimize_measurement(const TwoQubitState& rho, int grid_n);
double classical_correlation_oracle(const TwoQubitState& rho, int grid_n);

// max{0, 2|w| - 2b, 2|z| - 2 sqrt(ad)}.
double concurrence_x(const XState& x);

// Wootters concurrence max{0, l1 - l2 - l3 - l4}, l_i the decreasing square
// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy). They are computed
// as the spectrum of the Hermitian sqrt(rho) rho~ sqrt(rho).
double concurrence_general(const TwoQubitState& rho);

struct CorrelationReport {
  double mutual_info = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  double concurrence = 0.0;
  std::optional<Branch> branch;  // only for closed-form X-state reports
  double q1 = 0.0;
  double q2 = 0.0;
};

// Closed-form report with classical = mutual_info - discord.
CorrelationReport analyze(const XState& x);

// Numerical report for an arbitrary state: classical from the measurement
// oracle, discord = mutual_info - classical, no branch data.
CorrelationReport analyze_general(const TwoQubitState& rho, int grid_n);

}  // namespace ddcorr
