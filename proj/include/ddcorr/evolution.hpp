// Two-qubit states and the factorized decoherence map.
//
// Every 4x4 matrix here uses the ordered basis {|11>, |10>, |01>, |00>}
// (qubit A first); index i = 2*(1 - a) + (1 - b) for qubit values a, b.

#pragma once

#include "ddcorr/linalg.hpp"

namespace ddcorr {

// Validated density matrix: Hermitian and unit trace to 1e-12, smallest
// eigenvalue >= -1e-10. Invalid matrices are rejected, never repaired.
class TwoQubitState {
 public:
  static TwoQubitState from_matrix(const Matrix4& rho);

  const Matrix4& matrix() const noexcept { return rho_; }
  const cdouble& operator()(std::size_t i, std::size_t j) const noexcept { return rho_(i, j); }

  Matrix2 reduced_a() const;  // Tr_B
  Matrix2 reduced_b() const;  // Tr_A

 private:
  explicit TwoQubitState(const Matrix4& rho) : rho_(rho) {}
  Matrix4 rho_;
};

// Correlation triple of a state with maximally mixed marginals. Each |c_i| <= 1
// and the induced matrix must be positive semidefinite.
class BellDiagonalParams {
 public:
  BellDiagonalParams(double c1, double c2, double c3);

  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  double c3() const noexcept { return c3_; }

 private:
  double c1_, c2_, c3_;
};

// X state with equal middle populations:
//
//   | a 0 0 w |
//   | 0 b z 0 |
//   | 0 z* b 0 |
//   | w* 0 0 d |
class XState {
 public:
  XState(double a, double b, double d, cdouble z, cdouble w);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double d() const noexcept { return d_; }
  cdouble z() const noexcept { return z_; }
  cdouble w() const noexcept { return w_; }

  Matrix4 matrix() const;
  TwoQubitState to_state() const { return TwoQubitState::from_matrix(matrix()); }

 private:
  double a_, b_, d_;
  cdouble z_, w_;
};

TwoQubitState bell_diagonal_state(const BellDiagonalParams& c);

// r |psi-><psi-| + (1-r) I/4, r in [0, 1].
TwoQubitState werner_state(double r);
BellDiagonalParams werner_params(double r);

// Both qubits decay through their own reservoir with the same survival
// function value P in [0, 1]. Composes as evolve(evolve(rho, P1), P2) =
// evolve(rho, P1*P2).
TwoQubitState evolve(const TwoQubitState& rho0, double P);

// Closed form of evolve() for an initial state with maximally mixed marginals.
XState evolve_bd(const BellDiagonalParams& c, double P);

}  // namespace ddcorr
