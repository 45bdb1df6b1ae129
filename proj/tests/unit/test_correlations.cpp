#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ddcorr/correlations.hpp"
#include "ddcorr/decoherence.hpp"
#include "ddcorr/errors.hpp"
#include "support/oracles.hpp"

using namespace ddcorr;

namespace {

double h2(double p) { return (p <= 0 || p >= 1) ? 0.0 : -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

}  // namespace

TEST_CASE("entropies") {
  const std::vector<double> uniform{0.25, 0.25, 0.25, 0.25};
  CHECK(shannon_entropy(uniform) == doctest::Approx(2.0));
  const std::vector<double> with_zero{1.0, 0.0, 1e-17, 0.0};
  CHECK(shannon_entropy(with_zero) == 0.0);
  const std::vector<double> negative{1.1, -0.1};
  CHECK_THROWS_AS(shannon_entropy(negative), DomainError);

  CHECK(von_neumann_entropy(werner_state(0.0)) == doctest::Approx(2.0));
  CHECK(von_neumann_entropy(bell_diagonal_state(BellDiagonalParams(1, -1, 1))) == doctest::Approx(0.0).epsilon(1e-12));
  const double werner_half = -(5.0 / 8) * std::log2(5.0 / 8) - 3 * (1.0 / 8) * std::log2(1.0 / 8);
  CHECK(werner_half == doctest::Approx(1.549).epsilon(1e-3));
  CHECK(von_neumann_entropy(werner_state(0.5)) == doctest::Approx(werner_half));
  CHECK(von_neumann_entropy(evolve_bd(werner_params(0.5), 1.0)) == doctest::Approx(werner_half));
  CHECK(von_neumann_entropy(0.5 * Matrix2::identity()) == doctest::Approx(1.0));
}

TEST_CASE("X-state spectrum and entropy agree with Jacobi") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const auto x = testing::random_x_state(rng);
    const auto closed = x_state_spectrum(x);
    const auto jacobi = eigvalsh(x.matrix());
    for (std::size_t k = 0; k < 4; ++k) CHECK(closed[k] == doctest::Approx(jacobi[k]).epsilon(1e-12));
    CHECK(von_neumann_entropy(x) == doctest::Approx(von_neumann_entropy(x.to_state())).epsilon(1e-10));
    CHECK(mutual_information(x) == doctest::Approx(mutual_information(x.to_state())).epsilon(1e-10));
  }
}

TEST_CASE("entropy bounds on random states") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    const auto rho = TwoQubitState::from_matrix(testing::random_density_matrix(rng));
    const double s = von_neumann_entropy(rho);
    CHECK(s >= 0.0);
    CHECK(s <= 2.0 + 1e-12);
  }
}

TEST_CASE("mutual information examples") {
  CHECK(mutual_information(bell_diagonal_state(BellDiagonalParams(1, -1, 1))) == doctest::Approx(2.0));
  CHECK(mutual_information(werner_state(0.0)) == doctest::Approx(0.0).epsilon(1e-12));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto rho =
        TwoQubitState::from_matrix(kron(testing::random_qubit_state(rng), testing::random_qubit_state(rng)));
    CHECK(std::abs(mutual_information(rho)) <= 1e-10);
  }
}

TEST_CASE("discord closed form examples") {
  const auto bell = discord_x_closed(evolve_bd(BellDiagonalParams(1, -1, 1), 1.0));
  CHECK(bell.q == doctest::Approx(1.0));

  // Diagonal product state: both qubits with excited population p and q.
  const double p = 0.3;
  const XState product(p * p, p * (1 - p), (1 - p) * (1 - p), 0.0, 0.0);
  CHECK(std::abs(discord_x_closed(product).q) <= 1e-12);

  const XState classical(0.1, 0.2, 0.5, 0.0, 0.0);
  CHECK(std::abs(discord_x_closed(classical).q) <= 1e-12);

  // Bell-diagonal discord at P = 1 has the known closed form in terms of
  // c = max |c_i|.
  for (const auto& c : {BellDiagonalParams(0.9, -0.9, 1.0), BellDiagonalParams(-0.5, -0.5, -0.5),
                        BellDiagonalParams(0.3, -0.2, 0.5)}) {
    const double cmax = std::max({std::abs(c.c1()), std::abs(c.c2()), std::abs(c.c3())});
    const auto spectrum = eigvalsh(bell_diagonal_state(c).matrix());
    double expected = 2.0 - shannon_entropy(std::vector<double>(spectrum.begin(), spectrum.end()));
    expected -= 1.0 - h2((1 + cmax) / 2);
    CHECK(discord_x_closed(evolve_bd(c, 1.0)).q == doctest::Approx(expected).epsilon(1e-12));
  }

  // Reference value at t = 2 computed independently.
  const double P = pt_analytic(ReservoirParams(1.0, 0.1), PulseSchedule::none(), 2.0).population();
  const auto q = discord_x_closed(evolve_bd(BellDiagonalParams(0.9, -0.9, 1.0), P));
  CHECK(q.q == doctest::Approx(0.501740877743827).epsilon(1e-11));
  CHECK(q.branch == Branch::Q2);
}

TEST_CASE("discord vanishes at P = 0") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  while (checked < 200) {
    try {
      const BellDiagonalParams c(u(rng), u(rng), u(rng));
      const auto q = discord_x_closed(evolve_bd(c, 0.0));
      CHECK(std::abs(q.q) <= 1e-12);
      CHECK(std::abs(q.q1) <= 1e-12);
      CHECK(std::abs(q.q2) <= 1e-12);
      ++checked;
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("branch criterion at t = 0") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  while (checked < 500) {
    try {
      const BellDiagonalParams c(u(rng), u(rng), u(rng));
      const double side = std::max(std::abs(c.c1()), std::abs(c.c2()));
      if (std::abs(std::abs(c.c3()) - side) < 1e-6) continue;
      const auto q = discord_x_closed(evolve_bd(c, 1.0));
      CHECK((q.q1 < q.q2) == (std::abs(c.c3()) > side));
      ++checked;
    } catch (const DomainError&) {
    }
  }
  // Equal magnitudes give equal branches.
  const auto tie = discord_x_closed(evolve_bd(werner_params(0.5), 1.0));
  CHECK(tie.branch == Branch::Tie);
  CHECK(std::string(to_string(Branch::Tie)) == "tie");
}

TEST_CASE("measurement oracle") {
  const auto bell = bell_diagonal_state(BellDiagonalParams(1, -1, 1));
  CHECK(classical_correlation_oracle(bell, 64) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(classical_correlation_oracle(werner_state(0.0), 64)) <= 1e-12);
  CHECK_THROWS_AS(classical_correlation_oracle(bell, 63), DomainError);

  // A measurement along z on a classically correlated diagonal state extracts
  // all of its correlation.
  const XState diag(0.4, 0.1, 0.4, 0.0, 0.0);
  const auto rho = diag.to_state();
  CHECK(measured_information(rho, {0.0, 0.0}) == doctest::Approx(mutual_information(rho)));
  CHECK(measured_information(rho, {std::acos(-1.0) / 2, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));

  std::mt19937_64 rng(53);
  for (int i = 0; i < 10; ++i) {
    const auto x = testing::random_x_state(rng).to_state();
    const double coarse = classical_correlation_oracle(x, 64);
    const double fine = classical_correlation_oracle(x, 128);
    CHECK(fine >= coarse - 1e-12);
  }
}

TEST_CASE("oracle discord matches the closed form") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 20; ++i) {
    const auto x = testing::random_x_state(rng);
    const auto rho = x.to_state();
    const double oracle = mutual_information(rho) - classical_correlation_oracle(rho, 256);
    CHECK(std::abs(oracle - discord_x_closed(x).q) <= 2e-3);
  }
  const auto general = analyze_general(werner_state(0.7), 64);
  CHECK(!general.branch.has_value());
  CHECK(std::isnan(general.q1));
  CHECK(general.mutual_info == doctest::Approx(general.classical + general.discord));
}

TEST_CASE("concurrence examples") {
  CHECK(concurrence_x(evolve_bd(BellDiagonalParams(1, -1, 1), 1.0)) == doctest::Approx(1.0));
  CHECK(concurrence_x(evolve_bd(werner_params(1.0 / 3.0), 1.0)) == doctest::Approx(0.0));
  CHECK(concurrence_x(evolve_bd(werner_params(0.8), 1.0)) == doctest::Approx(0.7));
  CHECK(concurrence_general(werner_state(0.0)) == doctest::Approx(0.0));
  CHECK(concurrence_general(bell_diagonal_state(BellDiagonalParams(1, -1, 1))) == doctest::Approx(1.0));
  CHECK(concurrence_general(werner_state(1.0)) == doctest::Approx(1.0));
  for (double r = 0.0; r <= 1.0; r += 0.05)
    for (double P = 0.0; P <= 1.0; P += 0.1)
      CHECK(concurrence_x(evolve_bd(werner_params(r), P)) == doctest::Approx(testing::werner_concurrence(r, P)));
}

TEST_CASE("concurrence closed form matches the spin-flip construction") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 1000; ++i) {
    const auto x = testing::random_x_state(rng);
    const double cx = concurrence_x(x);
    CHECK(std::abs(cx - concurrence_general(x.to_state())) <= 1e-8);
    CHECK(cx >= 0.0);
    CHECK(cx <= 1.0);
  }
  for (int i = 0; i < 300; ++i) {
    const double c = concurrence_general(TwoQubitState::from_matrix(testing::random_density_matrix(rng)));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
  // Product states are unentangled.
  for (int i = 0; i < 100; ++i) {
    const auto rho =
        TwoQubitState::from_matrix(kron(testing::random_qubit_state(rng), testing::random_qubit_state(rng)));
    CHECK(concurrence_general(rho) <= 1e-7);
  }
}

TEST_CASE("report invariants") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 1000; ++i) {
    const auto r = analyze(testing::random_x_state(rng));
    CHECK(std::abs(r.mutual_info - r.classical - r.discord) <= 1e-10);
    CHECK(r.mutual_info >= -1e-10);
    CHECK(r.classical >= -1e-10);
    CHECK(r.discord >= -1e-10);
    CHECK(r.concurrence >= 0.0);
    CHECK(r.concurrence <= 1.0);
    CHECK(r.branch.has_value());
    CHECK(r.discord == doctest::Approx(std::min(r.q1, r.q2)));
  }
}
