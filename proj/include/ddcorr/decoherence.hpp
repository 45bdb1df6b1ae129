// Single-qubit decoherence function of a qubit coupled
// resonantly to a zero-temperature Lorentzian reservoir, optionally under an
// ideal (instantaneous) pi-pulse train about sigma_z.
//
// The excited-state amplitude g(t) obeys the Volterra integro-differential
// equation
//
//   dg/dt = -int_0^t K(t,t') g(t') dt',   g(0) = 1,
//   K(t,t') = s(t) s(t') (gamma0*lambda/2) exp(-lambda (t - t')),
//
// where s(t) = (-1)^floor(t/T) is the pulse sign factor (s = +1 without
// pulses). The survival function is P_t = g(t)^2.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ddcorr {

enum class Regime { NonMarkovian, Markovian, Boundary };

const char* to_string(Regime regime) noexcept;

// Lorentzian reservoir: Markovian decay rate gamma0 and spectral width lambda.
class ReservoirParams {
 public:
  ReservoirParams(double gamma0, double lambda);

  double gamma0() const noexcept { return gamma0_; }
  double lambda() const noexcept { return lambda_; }

  // NonMarkovian iff gamma0 > lambda/2, Markovian iff gamma0 < lambda/2. The
  // comparison carries a relative tolerance of 1e-12 so that parameters that are
  // equal up to rounding land on the Boundary branch.
  Regime regime() const noexcept;

  // d = sqrt(|2 gamma0 lambda - lambda^2|); zero on the boundary.
  double oscillation_rate() const noexcept;

  // gamma0*lambda/2, the memory kernel at zero lag.
  double kernel_strength() const noexcept { return 0.5 * gamma0_ * lambda_; }

 private:
  double gamma0_;
  double lambda_;
};

// Either no pulses or an ideal train of pi pulses at t = T, 2T, 3T, ...
class PulseSchedule {
 public:
  static PulseSchedule none() noexcept { return PulseSchedule{}; }
  static PulseSchedule ideal_train(double interval);

  bool has_pulses() const noexcept { return interval_ > 0.0; }
  // Pulse interval T; 0 when there are no pulses.
  double interval() const noexcept { return interval_; }

  // floor(t/T) on half-open intervals [nT, (n+1)T); 0 without pulses.
  std::size_t interval_index(double t) const noexcept;
  // (-1)^interval_index(t).
  int sign(double t) const noexcept;

 private:
  PulseSchedule() = default;
  double interval_ = 0.0;
};

struct DecoherenceAmplitude {
  double g = 1.0;
  double population() const noexcept { return g * g; }
};

// K(t,t') with its pulse sign factor. The equation of motion applies it with an
// overall minus sign. Requires 0 <= t_prime <= t.
double memory_kernel(const ReservoirParams& params, const PulseSchedule& schedule, double t, double t_prime);

// Piecewise-analytic evaluation of g(t).
//
// Between pulses every piece obeys g'' + lambda g' + (gamma0 lambda/2) g = 0,
// whose solution is exp(-lambda t/2)[A_n cos(d(t-nT)/2) + B_n sin(d(t-nT)/2)]
// (cosh/sinh in the Markovian regime, 1 and (t-nT) on the boundary). At each
// pulse g is continuous and dg/dt flips sign, because the memory integral is
// continuous while the prefactor s(t) flips. For the trigonometric branch this
// gives, with c = cos(dT/2), s = sin(dT/2),
//
//   A_n = c A_{n-1} + s B_{n-1}
//   B_n = (2 lambda/d) A_n - (c B_{n-1} - s A_{n-1}),   A_0 = 1, B_0 = lambda/d.
//
// Internally the state (g, dg/dt) is propagated across intervals instead of
// (A_n, B_n), which avoids the exp(lambda t/2) growth of the coefficients.
class AnalyticDecoherence {
 public:
  // Boundary states are precomputed up to `horizon`; evaluation past it is
  // still exact but walks forward from the last cached pulse on every call.
  AnalyticDecoherence(ReservoirParams params, PulseSchedule schedule, double horizon = 0.0);

  const ReservoirParams& params() const noexcept { return params_; }
  const PulseSchedule& schedule() const noexcept { return schedule_; }

  double amplitude(double t) const;
  double population(double t) const {
    const double g = amplitude(t);
    return g * g;
  }

  // (A_n, B_n) of the piece on [nT, (n+1)T) in the regime's basis:
  // cos/sin(d tau/2) when non-Markovian, cosh/sinh(d tau/2) when Markovian,
  // and 1/tau on the boundary, with the envelope exp(-lambda t/2) in absolute
  // time. Without pulses only n = 0 exists.
  std::pair<double, double> coefficients(std::size_t n) const;

 private:
  struct EdgeState {
    double g;
    double dg;  // right derivative, after the sign flip
  };

  EdgeState propagate(EdgeState start, double tau) const noexcept;
  EdgeState edge_state(std::size_t n) const;

  ReservoirParams params_;
  PulseSchedule schedule_;
  std::vector<EdgeState> edges_;  // edges_[n] is the state at t = nT
};

DecoherenceAmplitude pt_analytic(const ReservoirParams& params, const PulseSchedule& schedule, double t);

struct DecoherenceSamples {
  std::vector<double> times;
  std::vector<double> amplitude;  // g on `times`
  double step = 0.0;              // uniform step actually used
};

// Independent numerical solution of the integro-differential equation:
// trapezoidal quadrature of the memory integral and a Heun (explicit
// trapezoidal) time stepper on a grid that contains every pulse instant. The
// requested dt is shrunk to T/ceil(T/dt) when pulses are present; the grid
// ends at round(t_max/step)*step.
DecoherenceSamples pt_numeric(const ReservoirParams& params, const PulseSchedule& schedule, double t_max, double dt);

// Zeros t_n = 2(n pi - arctan(d/lambda))/d, n = 1..n_max, of the pulse-free
// decoherence function. Non-Markovian regime only.
std::vector<double> discord_zero_times(const ReservoirParams& params, int n_max);

}  // namespace ddcorr
