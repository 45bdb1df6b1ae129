#include "ddcorr/decoherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ddcorr/errors.hpp"

namespace ddcorr {

namespace {

constexpr double kBoundaryRelTol = 1e-12;

// exp(-lambda tau/2) times the fundamental solutions C (C(0)=1, C'(0)=0) and
// S (S(0)=0, S'(0)=1) of u'' = kappa u, kappa = lambda^2/4 - gamma0 lambda/2,
// together with their derivatives.
struct Basis {
  double c, s, dc, ds;
};

Basis enveloped_basis(Regime regime, double half_rate, double lambda, double tau) {
  const double w = half_rate;
  switch (regime) {
    case Regime::NonMarkovian: {
      const double env = std::exp(-0.5 * lambda * tau);
      const double cs = std::cos(w * tau);
      const double sn = std::sin(w * tau);
      return {env * cs, env * sn / w, -env * w * sn, env * cs};
    }
    case Regime::Markovian: {
      // Combine the envelope with cosh/sinh so large w*tau cannot overflow.
      const double ep = std::exp((w - 0.5 * lambda) * tau);
      const double em = std::exp((-w - 0.5 * lambda) * tau);
      const double ch = 0.5 * (ep + em);
      const double sh_over_w =
          (w * tau < 1.0) ? std::exp(-0.5 * lambda * tau) * std::sinh(w * tau) / w : 0.5 * (ep - em) / w;
      return {ch, sh_over_w, w * w * sh_over_w, ch};
    }
    case Regime::Boundary:
    default: {
      const double env = std::exp(-0.5 * lambda * tau);
      return {env, env * tau, 0.0, env};
    }
  }
}

void require_time(double t, const char* what) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError(std::string(what) + " must be a finite time >= 0");
}

}  // namespace

const char* to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::NonMarkovian: return "non-Markovian";
    case Regime::Markovian: return "Markovian";
    case Regime::Boundary: return "boundary";
  }
  return "unknown";
}

ReservoirParams::ReservoirParams(double gamma0, double lambda) : gamma0_(gamma0), lambda_(lambda) {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw DomainError("gamma0 must be positive and finite");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
}

Regime ReservoirParams::regime() const noexcept {
  const double disc = 2.0 * gamma0_ * lambda_ - lambda_ * lambda_;
  if (std::abs(disc) <= kBoundaryRelTol * lambda_ * lambda_) return Regime::Boundary;
  return disc > 0.0 ? Regime::NonMarkovian : Regime::Markovian;
}

double ReservoirParams::oscillation_rate() const noexcept {
  if (regime() == Regime::Boundary) return 0.0;
  return std::sqrt(std::abs(2.0 * gamma0_ * lambda_ - lambda_ * lambda_));
}

PulseSchedule PulseSchedule::ideal_train(double interval) {
  if (!(interval > 0.0) || !std::isfinite(interval)) throw DomainError("pulse interval T must be positive and finite");
  PulseSchedule s;
  s.interval_ = interval;
  return s;
}

std::size_t PulseSchedule::interval_index(double t) const noexcept {
  if (!has_pulses() || t <= 0.0) return 0;
  double n = std::floor(t / interval_);
  if (t < n * interval_) n -= 1.0;
  // Times within a few ulps of the next pulse instant (e.g. t = 1.2 for
  // T = 0.4, where 3 * 0.4 rounds up) belong to the new interval.
  const double next = (n + 1.0) * interval_;
  if (t >= next - 8.0 * std::numeric_limits<double>::epsilon() * next) n += 1.0;
  return static_cast<std::size_t>(n);
}

int PulseSchedule::sign(double t) const noexcept { return (interval_index(t) % 2 == 0) ? 1 : -1; }

double memory_kernel(const ReservoirParams& params, const PulseSchedule& schedule, double t, double t_prime) {
  require_time(t, "t");
  require_time(t_prime, "t'");
  if (t_prime > t) throw DomainError("memory_kernel requires t' <= t");
  const double magnitude = params.kernel_strength() * std::exp(-params.lambda() * (t - t_prime));
  return schedule.sign(t) * schedule.sign(t_prime) * magnitude;
}

AnalyticDecoherence::AnalyticDecoherence(ReservoirParams params, PulseSchedule schedule, double horizon)
    : params_(params), schedule_(schedule) {
  edges_.push_back({1.0, 0.0});
  if (schedule_.has_pulses() && horizon > 0.0 && std::isfinite(horizon)) {
    const auto n_max = static_cast<std::size_t>(std::ceil(horizon / schedule_.interval())) + 1;
    edges_.reserve(n_max + 1);
    while (edges_.size() <= n_max) {
      EdgeState next = propagate(edges_.back(), schedule_.interval());
      next.dg = -next.dg;
      edges_.push_back(next);
    }
  }
}

AnalyticDecoherence::EdgeState AnalyticDecoherence::propagate(EdgeState start, double tau) const noexcept {
  const double lambda = params_.lambda();
  const Basis b = enveloped_basis(params_.regime(), 0.5 * params_.oscillation_rate(), lambda, tau);
  // Coefficient of S in u(tau) = exp(lambda tau/2) g(tau).
  const double slope = start.dg + 0.5 * lambda * start.g;
  const double g = start.g * b.c + slope * b.s;
  const double dg = -0.5 * lambda * g + start.g * b.dc + slope * b.ds;
  return {g, dg};
}

AnalyticDecoherence::EdgeState AnalyticDecoherence::edge_state(std::size_t n) const {
  if (n < edges_.size()) return edges_[n];
  EdgeState state = edges_.back();
  for (std::size_t k = edges_.size() - 1; k < n; ++k) {
    state = propagate(state, schedule_.interval());
    state.dg = -state.dg;
  }
  return state;
}

double AnalyticDecoherence::amplitude(double t) const {
  require_time(t, "t");
  if (!schedule_.has_pulses()) return propagate(edges_.front(), t).g;
  const std::size_t n = schedule_.interval_index(t);
  const double tau = t - static_cast<double>(n) * schedule_.interval();
  return propagate(edge_state(n), tau < 0.0 ? 0.0 : tau).g;
}

std::pair<double, double> AnalyticDecoherence::coefficients(std::size_t n) const {
  if (!schedule_.has_pulses() && n > 0) throw DomainError("coefficients: only n = 0 exists without pulses");
  const EdgeState e = edge_state(n);
  const double t_n = static_cast<double>(n) * schedule_.interval();
  const double lambda = params_.lambda();
  const double rescale = std::exp(0.5 * lambda * t_n);
  const double a = e.g * rescale;
  const double slope = e.dg * rescale + 0.5 * lambda * a;
  if (params_.regime() == Regime::Boundary) return {a, slope};
  return {a, slope / (0.5 * params_.oscillation_rate())};
}

DecoherenceAmplitude pt_analytic(const ReservoirParams& params, const PulseSchedule& schedule, double t) {
  require_time(t, "t");
  return {AnalyticDecoherence(params, schedule).amplitude(t)};
}

DecoherenceSamples pt_numeric(const ReservoirParams& params, const PulseSchedule& schedule, double t_max, double dt) {
  require_time(t_max, "t_max");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");

  std::size_t steps_per_interval = 0;
  double h = dt;
  if (schedule.has_pulses()) {
    const double ratio = schedule.interval() / dt;
    if (ratio < 20.0 - 1e-9) throw DomainError("dt too coarse: at least 20 steps per pulse interval are required");
    steps_per_interval = static_cast<std::size_t>(std::ceil(ratio - 1e-9));
    h = schedule.interval() / static_cast<double>(steps_per_interval);
  }
  const auto n_steps = static_cast<std::size_t>(std::llround(t_max / h));

  DecoherenceSamples out;
  out.step = h;
  out.times.resize(n_steps + 1);
  out.amplitude.resize(n_steps + 1);
  out.times[0] = 0.0;
  out.amplitude[0] = 1.0;

  const double strength = params.kernel_strength();
  const double decay = std::exp(-params.lambda() * h);
  // memory = int_0^t exp(-lambda (t - t')) s(t') g(t') dt', accumulated by the
  // trapezoidal rule. The sign inside each step is that of the pulse interval
  // the step belongs to, so the rule never straddles a discontinuity.
  double memory = 0.0;
  double g = 1.0;
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double s = (steps_per_interval == 0 || (k / steps_per_interval) % 2 == 0) ? 1.0 : -1.0;
    const double f0 = -strength * s * memory;
    const double g_pred = g + h * f0;
    const double memory_pred = decay * memory + 0.5 * h * (decay * s * g + s * g_pred);
    const double f1 = -strength * s * memory_pred;
    const double g_next = g + 0.5 * h * (f0 + f1);
    memory = decay * memory + 0.5 * h * (decay * s * g + s * g_next);
    g = g_next;
    out.times[k + 1] = static_cast<double>(k + 1) * h;
    out.amplitude[k + 1] = g;
  }
  return out;
}

std::vector<double> discord_zero_times(const ReservoirParams& params, int n_max) {
  if (params.regime() != Regime::NonMarkovian)
    throw DomainError("decoherence zeros exist only in the non-Markovian regime (gamma0 > lambda/2)");
  std::vector<double> zeros;
  const double d = params.oscillation_rate();
  const double phase = std::atan(d / params.lambda());
  for (int n = 1; n <= n_max; ++n) zeros.push_back(2.0 * (n * std::numbers::pi - phase) / d);
  return zeros;
}

}  // namespace ddcorr
