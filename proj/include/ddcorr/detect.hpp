// Trajectories of the correlation measures and the dynamical
// events along them: discord sudden changes, entanglement sudden death and
// zeros of the decoherence function.

#pragma once

#include <optional>
#include <vector>

#include "ddcorr/correlations.hpp"
#include "ddcorr/decoherence.hpp"
#include "ddcorr/evolution.hpp"

namespace ddcorr {

inline constexpr double kDefaultEventStep = 0.01;
inline constexpr double kEventTimeTol = 1e-8;

// Everything needed to re-evaluate a trajectory at an arbitrary time.
struct TrajectoryMeta {
  ReservoirParams reservoir;
  PulseSchedule schedule;
  BellDiagonalParams initial;
};

struct TrajectoryPoint {
  double amplitude = 1.0;  // g(t); P_t = amplitude^2
  XState state;
  CorrelationReport report;
};

TrajectoryPoint evaluate_point(const AnalyticDecoherence& decoherence, const BellDiagonalParams& initial, double t);

class Trajectory {
 public:
  // times must be strictly increasing and match the other vectors in length.
  Trajectory(TrajectoryMeta meta, std::vector<double> times, std::vector<double> amplitudes,
             std::vector<CorrelationReport> reports);

  const TrajectoryMeta& meta() const noexcept { return meta_; }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<double>& amplitudes() const noexcept { return amplitudes_; }
  const std::vector<CorrelationReport>& reports() const noexcept { return reports_; }
  std::size_t size() const noexcept { return times_.size(); }

  // Exact re-evaluation at t (used by the bisection refinements).
  TrajectoryPoint evaluate(double t) const;

 private:
  TrajectoryMeta meta_;
  AnalyticDecoherence decoherence_;
  std::vector<double> times_;
  std::vector<double> amplitudes_;
  std::vector<CorrelationReport> reports_;
};

// Samples t_start + k*step for k = 0..round((t_end - t_start)/step).
Trajectory make_trajectory(const TrajectoryMeta& meta, double t_start, double t_end, double step = kDefaultEventStep);

struct EsdResult {
  std::optional<double> time;
  bool identically_zero = false;  // C_E == 0 at every sample
};

struct EventList {
  std::vector<double> sudden_changes;
  EsdResult esd;
  std::vector<double> discord_zeros;
};

// Times where the minimizing discord branch switches between Q1 and Q2, refined
// by bisection on sign(Q1 - Q2) to kEventTimeTol. Tie samples are crossing
// candidates: a run of ties counts as a switch only when the strict branches
// on either side differ. Throws DomainError if any report lacks branch data.
std::vector<double> find_sudden_changes(const Trajectory& traj);

// First positive-to-zero transition of the concurrence, refined by bisection.
EsdResult find_esd(const Trajectory& traj);

// Sign changes of g(t), i.e. zeros of P_t, where Q = 0. Refined by bisection.
std::vector<double> find_discord_zeros(const Trajectory& traj);

EventList detect_events(const Trajectory& traj);

}  // namespace ddcorr
