#include "ddcorr/detect.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ddcorr/errors.hpp"

namespace ddcorr {

namespace {

constexpr double kEsdBracket = 1e-9;

// Bisection on a predicate that is true at lo and false at hi.
template <class Pred>
std::pair<double, double> bisect(double lo, double hi, double width, Pred&& holds_at) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (holds_at(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

int strict_sign(const CorrelationReport& r) {
  switch (*r.branch) {
    case Branch::Q1: return 1;   // q1 < q2
    case Branch::Q2: return -1;  // q2 < q1
    case Branch::Tie: break;
  }
  return 0;
}

}  // namespace

TrajectoryPoint evaluate_point(const AnalyticDecoherence& decoherence, const BellDiagonalParams& initial, double t) {
  const double g = decoherence.amplitude(t);
  const double P = std::min(g * g, 1.0);
  const XState x = evolve_bd(initial, P);
  return {g, x, analyze(x)};
}

Trajectory::Trajectory(TrajectoryMeta meta, std::vector<double> times, std::vector<double> amplitudes,
                       std::vector<CorrelationReport> reports)
    : meta_(meta),
      decoherence_(meta.reservoir, meta.schedule, times.empty() ? 0.0 : times.back()),
      times_(std::move(times)),
      amplitudes_(std::move(amplitudes)),
      reports_(std::move(reports)) {
  if (times_.size() != amplitudes_.size() || times_.size() != reports_.size())
    throw DomainError("trajectory arrays differ in length");
  for (std::size_t k = 1; k < times_.size(); ++k)
    if (!(times_[k] > times_[k - 1])) throw DomainError("trajectory times must be strictly increasing");
}

TrajectoryPoint Trajectory::evaluate(double t) const { return evaluate_point(decoherence_, meta_.initial, t); }

Trajectory make_trajectory(const TrajectoryMeta& meta, double t_start, double t_end, double step) {
  if (!(t_start >= 0.0)) throw DomainError("trajectory window must start at t >= 0");
  if (!(step > 0.0)) throw DomainError("trajectory step must be positive");
  if (!(t_end >= t_start)) throw DomainError("trajectory window end precedes its start");

  const auto n = static_cast<std::size_t>(std::llround((t_end - t_start) / step));
  const AnalyticDecoherence decoherence(meta.reservoir, meta.schedule, t_start + n * step);
  std::vector<double> times(n + 1);
  std::vector<double> amplitudes(n + 1);
  std::vector<CorrelationReport> reports(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    times[k] = t_start + static_cast<double>(k) * step;
    const TrajectoryPoint p = evaluate_point(decoherence, meta.initial, times[k]);
    amplitudes[k] = p.amplitude;
    reports[k] = p.report;
  }
  return Trajectory(meta, std::move(times), std::move(amplitudes), std::move(reports));
}

std::vector<double> find_sudden_changes(const Trajectory& traj) {
  const auto& reports = traj.reports();
  for (const auto& r : reports)
    if (!r.branch) throw DomainError("sudden-change detection needs discord branch data in every report");

  const auto& times = traj.times();
  std::vector<double> changes;
  int last_sign = 0;
  std::size_t last_index = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const int s = strict_sign(reports[k]);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      // q1 - q2 has sign -last_sign at lo and -s at hi.
      auto [lo, hi] = bisect(times[last_index], times[k], kEventTimeTol, [&](double t) {
        const CorrelationReport r = traj.evaluate(t).report;
        return (r.q1 - r.q2) * last_sign < 0.0;
      });
      changes.push_back(0.5 * (lo + hi));
    }
    last_sign = s;
    last_index = k;
  }
  return changes;
}

EsdResult find_esd(const Trajectory& traj) {
  const auto& reports = traj.reports();
  const auto& times = traj.times();
  EsdResult out;
  out.identically_zero =
      std::all_of(reports.begin(), reports.end(), [](const CorrelationReport& r) { return r.concurrence <= 0.0; });
  if (out.identically_zero) return out;

  for (std::size_t k = 0; k + 1 < reports.size(); ++k) {
    if (reports[k].concurrence > 0.0 && reports[k + 1].concurrence <= 0.0) {
      auto [lo, hi] = bisect(times[k], times[k + 1], kEsdBracket,
                             [&](double t) { return traj.evaluate(t).report.concurrence > 0.0; });
      out.time = 0.5 * (lo + hi);
      break;
    }
  }
  return out;
}

std::vector<double> find_discord_zeros(const Trajectory& traj) {
  const auto& g = traj.amplitudes();
  const auto& times = traj.times();
  std::vector<double> zeros;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == 0.0) {
      zeros.push_back(times[k]);
      continue;
    }
    if (k + 1 < g.size() && g[k] * g[k + 1] < 0.0) {
      const double sign = g[k] > 0.0 ? 1.0 : -1.0;
      auto [lo, hi] = bisect(times[k], times[k + 1], kEventTimeTol,
                             [&](double t) { return traj.evaluate(t).amplitude * sign > 0.0; });
      zeros.push_back(0.5 * (lo + hi));
    }
  }
  return zeros;
}

EventList detect_events(const Trajectory& traj) {
  EventList events;
  events.sudden_changes = find_sudden_changes(traj);
  events.esd = find_esd(traj);
  events.discord_zeros = find_discord_zeros(traj);
  return events;
}

}  // namespace ddcorr
