#include "ddcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ddcorr/errors.hpp"

namespace ddcorr {

namespace {

constexpr double kNegativeEigenvalueTol = 1e-10;
constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio
constexpr int kGoldenIterations = 64;
constexpr int kRefineRounds = 4;

double xlog2x(double p) { return p > kEntropyCutoff ? p * std::log2(p) : 0.0; }

// x log2(x / (x + y)), zero when x vanishes.
double conditional_term(double x, double y) {
  if (x <= kEntropyCutoff) return 0.0;
  return x * std::log2(x / (x + y));
}

double binary_entropy_of(double p0, double p1) { return -(xlog2x(p0) + xlog2x(p1)); }

// Unnormalized conditional state of A after outcome projector `proj` on B.
Matrix2 conditional_a(const Matrix4& rho, const Matrix2& proj) {
  Matrix2 out;
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t n = 0; n < 2; ++n) {
      cdouble acc = 0.0;
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) acc += proj(j, l) * rho(2 * m + l, 2 * n + j);
      out(m, n) = acc;
    }
  return out;
}

double measured_information_impl(const Matrix4& rho, double entropy_a, double theta, double phi) {
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  double conditional = 0.0;
  for (double sign : {1.0, -1.0}) {
    Matrix2 proj;
    proj(0, 0) = 0.5 * (1.0 + sign * nz);
    proj(1, 1) = 0.5 * (1.0 - sign * nz);
    proj(0, 1) = 0.5 * sign * cdouble(nx, -ny);
    proj(1, 0) = 0.5 * sign * cdouble(nx, ny);
    const Matrix2 sigma = conditional_a(rho, proj);
    const double p = sigma.trace().real();
    if (p <= kEntropyCutoff) continue;
    const auto ev = eigvalsh(sigma);
    conditional += p * binary_entropy_of(std::max(ev[0] / p, 0.0), std::max(ev[1] / p, 0.0));
  }
  return entropy_a - conditional;
}

template <class F>
double golden_maximize(F&& f, double lo, double hi, double& best_x) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  if (f1 >= f2) {
    best_x = x1;
    return f1;
  }
  best_x = x2;
  return f2;
}

MeasurementBasis canonical_basis(double theta, double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  if (theta > std::numbers::pi) {
    theta = two_pi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  return {theta, phi};
}

const Matrix4& spin_flip() {
  static const Matrix4 m = [] {
    Matrix4 s;
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    return s;
  }();
  return m;
}

}  // namespace

const char* to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::Q1: return "Q1";
    case Branch::Q2: return "Q2";
    case Branch::Tie: return "tie";
  }
  return "unknown";
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (!(p >= -kNegativeEigenvalueTol)) throw DomainError("entropy of a spectrum with a negative eigenvalue");
    h -= xlog2x(p);
  }
  return h;
}

double von_neumann_entropy(const Matrix2& rho) {
  if (hermiticity_error(rho) > 1e-12) throw DomainError("entropy of a non-Hermitian matrix");
  const auto ev = eigvalsh(rho);
  return shannon_entropy(ev);
}

double von_neumann_entropy(const TwoQubitState& rho) {
  const auto ev = eigvalsh(rho.matrix());
  return shannon_entropy(ev);
}

std::array<double, 4> x_state_spectrum(const XState& x) {
  const double mean = 0.5 * (x.a() + x.d());
  const double radius = std::hypot(0.5 * (x.a() - x.d()), std::abs(x.w()));
  const double z = std::abs(x.z());
  std::array<double, 4> ev{mean - radius, mean + radius, x.b() - z, x.b() + z};
  std::sort(ev.begin(), ev.end());
  return ev;
}

double von_neumann_entropy(const XState& x) {
  const auto ev = x_state_spectrum(x);
  return shannon_entropy(ev);
}

double mutual_information(const TwoQubitState& rho) {
  return von_neumann_entropy(rho.reduced_a()) + von_neumann_entropy(rho.reduced_b()) - von_neumann_entropy(rho);
}

double mutual_information(const XState& x) {
  // Both marginals are diag(a + b, b + d).
  const double marginal = binary_entropy_of(x.a() + x.b(), x.b() + x.d());
  return 2.0 * marginal - von_neumann_entropy(x);
}

DiscordValue discord_x_closed(const XState& x) {
  const double a = x.a();
  const double b = x.b();
  const double d = x.d();
  const double entropy_a = binary_entropy_of(a + b, b + d);
  const double entropy_ab = von_neumann_entropy(x);

  DiscordValue out;
  out.q1 = entropy_a - entropy_ab - conditional_term(a, b) - conditional_term(b, a) - conditional_term(d, b) -
           conditional_term(b, d);

  const double coherence = std::abs(x.z()) + std::abs(x.w());
  const double spread = 0.5 * std::sqrt((a - d) * (a - d) + 4.0 * coherence * coherence);
  out.q2 = entropy_a - entropy_ab + binary_entropy_of(0.5 + spread, 0.5 - spread);

  if (std::abs(out.q1 - out.q2) <= kBranchTieTol) {
    out.branch = Branch::Tie;
    out.q = std::min(out.q1, out.q2);
  } else if (out.q1 < out.q2) {
    out.branch = Branch::Q1;
    out.q = out.q1;
  } else {
    out.branch = Branch::Q2;
    out.q = out.q2;
  }
  return out;
}

double measured_information(const TwoQubitState& rho, const MeasurementBasis& basis) {
  return measured_information_impl(rho.matrix(), von_neumann_entropy(rho.reduced_a()), basis.theta, basis.phi);
}

MeasurementOptimum optimize_measurement(const TwoQubitState& rho, int grid_n) {
  if (grid_n < 64) throw DomainError("measurement grid must have grid_n >= 64");
  const Matrix4& m = rho.matrix();
  const double entropy_a = von_neumann_entropy(rho.reduced_a());
  auto eval = [&](double theta, double phi) { return measured_information_impl(m, entropy_a, theta, phi); };

  const double d_theta = std::numbers::pi / grid_n;
  const double d_phi = 2.0 * std::numbers::pi / grid_n;
  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i <= grid_n; ++i) {
    const double theta = d_theta * i;
    for (int j = 0; j < grid_n; ++j) {
      const double phi = d_phi * j;
      const double v = eval(theta, phi);
      if (v > best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  double theta = best_theta;
  double phi = best_phi;
  double refined = best;
  double half_theta = d_theta;
  double half_phi = d_phi;
  for (int round = 0; round < kRefineRounds; ++round) {
    double arg = theta;
    double v = golden_maximize([&](double t) { return eval(t, phi); }, theta - half_theta, theta + half_theta, arg);
    if (v > refined) {
      refined = v;
      theta = arg;
    }
    v = golden_maximize([&](double p) { return eval(theta, p); }, phi - half_phi, phi + half_phi, arg);
    if (v > refined) {
      refined = v;
      phi = arg;
    }
    half_theta *= 0.5;
    half_phi *= 0.5;
  }
  return {refined, canonical_basis(theta, phi)};
}

double classical_correlation_oracle(const TwoQubitState& rho, int grid_n) {
  return optimize_measurement(rho, grid_n).value;
}

double concurrence_x(const XState& x) {
  const double via_w = 2.0 * std::abs(x.w()) - 2.0 * std::abs(x.b());
  const double via_z = 2.0 * std::abs(x.z()) - 2.0 * std::sqrt(std::max(x.a() * x.d(), 0.0));
  return std::max({0.0, via_w, via_z});
}

double concurrence_general(const TwoQubitState& rho) {
  const Matrix4& m = rho.matrix();
  const auto eig = eigh(m);
  Matrix4 root;
  for (std::size_t k = 0; k < 4; ++k) {
    const double s = std::sqrt(std::max(eig.values[k], 0.0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) root(i, j) += s * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  const Matrix4 flipped = spin_flip() * m.conjugate() * spin_flip();
  Matrix4 r = root * flipped * root;
  const Matrix4 r_dag = r.adjoint();
  for (std::size_t k = 0; k < 16; ++k) r.data[k] = 0.5 * (r.data[k] + r_dag.data[k]);

  auto mu = eigvalsh(r);
  std::array<double, 4> l{};
  for (std::size_t k = 0; k < 4; ++k) l[k] = std::sqrt(std::max(mu[3 - k], 0.0));
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

CorrelationReport analyze(const XState& x) {
  const DiscordValue q = discord_x_closed(x);
  CorrelationReport r;
  r.mutual_info = mutual_information(x);
  r.discord = q.q;
  r.classical = r.mutual_info - q.q;
  r.concurrence = concurrence_x(x);
  r.branch = q.branch;
  r.q1 = q.q1;
  r.q2 = q.q2;
  return r;
}

CorrelationReport analyze_general(const TwoQubitState& rho, int grid_n) {
  CorrelationReport r;
  r.mutual_info = mutual_information(rho);
  r.classical = classical_correlation_oracle(rho, grid_n);
  r.discord = r.mutual_info - r.classical;
  r.concurrence = concurrence_general(rho);
  r.q1 = std::numeric_limits<double>::quiet_NaN();
  r.q2 = std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace ddcorr
