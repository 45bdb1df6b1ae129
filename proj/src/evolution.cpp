#include "ddcorr/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "ddcorr/errors.hpp"

namespace ddcorr {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kPopulationSlack = 1e-12;

void require_survival(double P) {
  if (!(P >= 0.0 && P <= 1.0)) throw DomainError("survival function P must lie in [0, 1]");
}

}  // namespace

TwoQubitState TwoQubitState::from_matrix(const Matrix4& rho) {
  for (const auto& x : rho.data)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw DomainError("density matrix has non-finite entries");
  if (hermiticity_error(rho) > kHermitianTol) throw DomainError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kTraceTol) throw DomainError("density matrix does not have unit trace");
  if (eigvalsh(rho)[0] < -kPsdTol) throw DomainError("density matrix is not positive semidefinite");
  return TwoQubitState(rho);
}

Matrix2 TwoQubitState::reduced_a() const {
  Matrix2 out;
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t n = 0; n < 2; ++n) out(m, n) = rho_(2 * m, 2 * n) + rho_(2 * m + 1, 2 * n + 1);
  return out;
}

Matrix2 TwoQubitState::reduced_b() const {
  Matrix2 out;
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t n = 0; n < 2; ++n) out(m, n) = rho_(m, n) + rho_(2 + m, 2 + n);
  return out;
}

BellDiagonalParams::BellDiagonalParams(double c1, double c2, double c3) : c1_(c1), c2_(c2), c3_(c3) {
  for (double c : {c1, c2, c3})
    if (!(std::abs(c) <= 1.0)) throw DomainError("Bell-diagonal parameters must satisfy |c_i| <= 1");
  const double eigenvalues[] = {
      (1.0 + c3 + (c1 - c2)) / 4.0,
      (1.0 + c3 - (c1 - c2)) / 4.0,
      (1.0 - c3 + (c1 + c2)) / 4.0,
      (1.0 - c3 - (c1 + c2)) / 4.0,
  };
  for (double e : eigenvalues)
    if (e < -kPsdTol) throw DomainError("Bell-diagonal parameters give a negative eigenvalue");
}

XState::XState(double a, double b, double d, cdouble z, cdouble w) : a_(a), b_(b), d_(d), z_(z), w_(w) {
  for (double p : {a, b, d})
    if (!(p >= -kPopulationSlack)) throw DomainError("X state populations must be non-negative");
  if (std::abs(a + 2.0 * b + d - 1.0) > kTraceTol) throw DomainError("X state populations must satisfy a + 2b + d = 1");
  if (!(std::abs(z) <= std::max(b, 0.0) + kPsdTol)) throw DomainError("X state requires |z| <= b");
  if (!(std::abs(w) <= std::sqrt(std::max(a * d, 0.0)) + kPsdTol)) throw DomainError("X state requires |w| <= sqrt(ad)");
}

Matrix4 XState::matrix() const {
  Matrix4 m;
  m(0, 0) = a_;
  m(1, 1) = b_;
  m(2, 2) = b_;
  m(3, 3) = d_;
  m(0, 3) = w_;
  m(3, 0) = std::conj(w_);
  m(1, 2) = z_;
  m(2, 1) = std::conj(z_);
  return m;
}

TwoQubitState bell_diagonal_state(const BellDiagonalParams& c) {
  Matrix4 m;
  m(0, 0) = m(3, 3) = (1.0 + c.c3()) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 - c.c3()) / 4.0;
  m(0, 3) = m(3, 0) = (c.c1() - c.c2()) / 4.0;
  m(1, 2) = m(2, 1) = (c.c1() + c.c2()) / 4.0;
  return TwoQubitState::from_matrix(m);
}

BellDiagonalParams werner_params(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("Werner parameter r must lie in [0, 1]");
  return BellDiagonalParams(-r, -r, -r);
}

TwoQubitState werner_state(double r) { return bell_diagonal_state(werner_params(r)); }

TwoQubitState evolve(const TwoQubitState& rho0, double P) {
  require_survival(P);
  const Matrix4& r = rho0.matrix();
  const double sq = std::sqrt(P);
  const double p32 = P * sq;

  Matrix4 out;
  const double p11 = r(0, 0).real();
  out(0, 0) = p11 * P * P;
  out(1, 1) = r(1, 1).real() * P + p11 * P * (1.0 - P);
  out(2, 2) = r(2, 2).real() * P + p11 * P * (1.0 - P);
  // Equal to 1 - (rho11 + rho22 + rho33) at unit trace, but exact at P = 1.
  out(3, 3) = r(3, 3).real() + (r(1, 1).real() + r(2, 2).real()) * (1.0 - P) + p11 * (1.0 - P) * (1.0 - P);

  out(0, 1) = r(0, 1) * p32;
  out(0, 2) = r(0, 2) * p32;
  out(0, 3) = r(0, 3) * P;
  out(1, 2) = r(1, 2) * P;
  // Coherences with one qubit in the ground state on both sides: the decaying
  // qubit contributes sqrt(P) and the feed from |11> brings (1 - P).
  out(1, 3) = sq * (r(1, 3) + r(0, 2) * (1.0 - P));
  out(2, 3) = sq * (r(2, 3) + r(0, 1) * (1.0 - P));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) out(j, i) = std::conj(out(i, j));

  return TwoQubitState::from_matrix(out);
}

XState evolve_bd(const BellDiagonalParams& c, double P) {
  require_survival(P);
  const double a = (1.0 + c.c3()) * P * P / 4.0;
  return XState(a, P / 2.0 - a, 1.0 - P + a, (c.c1() + c.c2()) * P / 4.0, (c.c1() - c.c2()) * P / 4.0);
}

}  // namespace ddcorr
