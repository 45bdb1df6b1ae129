// Fixed-size complex matrices and a cyclic Jacobi eigensolver for
// small Hermitian matrices. Sized for 2x2 and 4x4 density matrices.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace ddcorr {

using cdouble = std::complex<double>;

template <std::size_t N>
struct CMatrix {
  std::array<cdouble, N * N> data{};

  static constexpr std::size_t size() noexcept { return N; }

  static CMatrix identity() {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  cdouble& operator()(std::size_t i, std::size_t j) noexcept { return data[i * N + j]; }
  const cdouble& operator()(std::size_t i, std::size_t j) const noexcept { return data[i * N + j]; }

  CMatrix adjoint() const {
    CMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
  }

  CMatrix conjugate() const {
    CMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.data[k] = std::conj(data[k]);
    return out;
  }

  cdouble trace() const {
    cdouble t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix& operator+=(const CMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data[k] += o.data[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data[k] -= o.data[k];
    return *this;
  }
  CMatrix& operator*=(cdouble s) {
    for (auto& x : data) x *= s;
    return *this;
  }
};

using Matrix2 = CMatrix<2>;
using Matrix4 = CMatrix<4>;

template <std::size_t N>
CMatrix<N> operator+(CMatrix<N> a, const CMatrix<N>& b) { return a += b; }
template <std::size_t N>
CMatrix<N> operator-(CMatrix<N> a, const CMatrix<N>& b) { return a -= b; }
template <std::size_t N>
CMatrix<N> operator*(cdouble s, CMatrix<N> a) { return a *= s; }

template <std::size_t N>
CMatrix<N> operator*(const CMatrix<N>& a, const CMatrix<N>& b) {
  CMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble{}) continue;
      for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

// Largest |m(i,j) - conj(m(j,i))|.
template <std::size_t N>
double hermiticity_error(const CMatrix<N>& m) {
  double err = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) err = std::max(err, std::abs(m(i, j) - std::conj(m(j, i))));
  return err;
}

template <std::size_t N>
double max_abs_difference(const CMatrix<N>& a, const CMatrix<N>& b) {
  double err = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) err = std::max(err, std::abs(a.data[k] - b.data[k]));
  return err;
}

inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values{};  // ascending
  CMatrix<N> vectors;              // column k pairs with values[k]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Each rotation first
// removes the phase of the pivot with a diagonal unitary, then applies the
// classical real rotation. Sweeps stop once the off-diagonal Frobenius norm is
// at most off_tolerance.
template <std::size_t N>
HermitianEigen<N> eigh(const CMatrix<N>& input, double off_tolerance = 1e-13, int max_sweeps = 64) {
  CMatrix<N> a = input;
  CMatrix<N> v = CMatrix<N>::identity();

  auto off_norm = [&a] {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > off_tolerance) {
    if (++sweep > max_sweeps) throw std::runtime_error("eigh: Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cdouble apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const cdouble phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U restricted to the (p,q) plane.
        const cdouble u_pp = c;
        const cdouble u_pq = s;
        const cdouble u_qp = -s * std::conj(phase);
        const cdouble u_qq = c * std::conj(phase);

        for (std::size_t k = 0; k < N; ++k) {  // a <- a U
          const cdouble akp = a(k, p);
          const cdouble akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (std::size_t k = 0; k < N; ++k) {  // a <- U^dagger a
          const cdouble apk = a(p, k);
          const cdouble aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < N; ++k) {  // v <- v U
          const cdouble vkp = v(k, p);
          const cdouble vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
      }
    }
  }

  std::array<std::size_t, N> order{};
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

template <std::size_t N>
std::array<double, N> eigvalsh(const CMatrix<N>& m) {
  return eigh(m).values;
}

// Closed-form eigenvalues of a Hermitian 2x2 matrix, ascending.
inline std::array<double, 2> eigvalsh(const Matrix2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {mean - radius, mean + radius};
}

}  // namespace ddcorr
