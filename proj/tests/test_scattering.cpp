#include <catch_amalgamated.hpp>

#include <random>

#include "apgate/drive_control.hpp"
#include "apgate/errors.hpp"
#include "apgate/scattering.hpp"

using namespace apgate;
using Catch::Approx;

TEST_CASE("probability is conserved over 1e5 random drives and probe frequencies") {
  SystemParams p;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> nu_d(p.atom_freq - 2 * p.dispersive_shift + 1e-6,
                                              p.atom_freq - 1e-6);
  std::uniform_real_distribution<double> omega(0.0, 0.1);
  std::uniform_real_distribution<double> probe(9.6, 10.2);
  std::uniform_real_distribution<double> kappa(1e-4, 0.05);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    SystemParams q = p;
    q.resonator_linewidth = kappa(rng);
    const auto s = dressed_spectrum(q, {nu_d(rng), omega(rng)});
    const auto xi = xi_matrix(s, probe(rng));
    worst = std::max(worst, std::abs(std::norm(xi.xi11) + std::norm(xi.xi12) - 1.0));
    worst = std::max(worst, std::abs(std::norm(xi.xi21) + std::norm(xi.xi22) - 1.0));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("xi21 at w - dw equals xi12 at w") {
  SystemParams p;
  const auto s = dressed_spectrum(p, {4.91, 0.035});
  for (double nu : {9.80, 9.83, 9.9, 9.95, 10.0}) {
    const auto a = xi_matrix(s, nu);
    const auto b = xi_matrix(s, nu - s.transitions.w21);
    CHECK(std::abs(b.xi21 - a.xi12) < 1e-12);
  }
}

TEST_CASE("far off resonance the photon is reflected without flipping the atom") {
  SystemParams p;
  const auto s = dressed_spectrum(p, {4.9, 0.03});
  const auto xi = xi_matrix(s, 12.0);
  CHECK(std::abs(xi.xi11 - 1.0) < 5e-3);
  CHECK(std::abs(xi.xi22 - 1.0) < 5e-3);
  CHECK(std::abs(xi.xi12) < 5e-3);
}

TEST_CASE("drive off: a resonant photon is reflected with a pi phase and no Raman flip") {
  SystemParams p;
  const auto s = dressed_spectrum(p, {4.9, 0.0});
  const auto xi = xi_matrix(s, s.transitions.w41);
  CHECK(std::abs(xi.xi11 + 1.0) < 1e-12);
  CHECK(std::abs(xi.xi12) < 1e-12);
}

TEST_CASE("at the SWAP point the carriers are converted up to the far transition") {
  SystemParams p;
  const auto wp = swap_point(p, 0.125);
  const auto s = dressed_spectrum(p, wp.drive);
  const auto at_h = xi_matrix(s, wp.carrier_h);
  const auto at_l = xi_matrix(s, wp.carrier_l);
  // the resonant channel cancels the 1; what remains is half the Lorentzian
  // of the other transition out of the same level
  const double k = p.resonator_linewidth;
  auto half_lorentz = [k](double detuning) { return 0.5 * k / std::hypot(k / 2, detuning); };
  CHECK(std::abs(at_h.xi11) == Approx(half_lorentz(wp.carrier_h - s.transitions.w41)).epsilon(1e-9));
  CHECK(std::abs(at_l.xi22) == Approx(half_lorentz(wp.carrier_l - s.transitions.w42)).epsilon(1e-9));
  CHECK(std::abs(at_h.xi11) < 0.05);
  CHECK(std::norm(at_h.xi12) == Approx(1.0 - std::norm(at_h.xi11)).margin(1e-12));
  CHECK(std::norm(at_l.xi21) == Approx(1.0 - std::norm(at_l.xi22)).margin(1e-12));
  const auto& m = wp.predicted.matrix;
  CHECK(std::abs(m(basis_index(1, 0), basis_index(0, 1))) == Approx(std::abs(at_h.xi12)));
  CHECK(std::abs(m(basis_index(0, 1), basis_index(1, 0))) == Approx(std::abs(at_l.xi21)));
}

TEST_CASE("couplings square to the dressed decay rates") {
  SystemParams p;
  const auto s = dressed_spectrum(p, {4.9, 0.03});
  const auto eta = coupling_table(s);
  const double two_pi = 2 * 3.14159265358979323846;
  CHECK(eta.eta31 * eta.eta31 == Approx(two_pi * s.kappa31));
  CHECK(eta.eta32 * eta.eta32 == Approx(two_pi * s.kappa32));
  CHECK(eta.eta41 * eta.eta41 == Approx(two_pi * s.kappa41));
  CHECK(eta.eta42 * eta.eta42 == Approx(two_pi * s.kappa42));
}

TEST_CASE("monochromatic gate requires carriers spaced by w21") {
  SystemParams p;
  const auto s = dressed_spectrum(p, {4.9, 0.03});
  CHECK_THROWS_AS(monochromatic_gate(s, 9.8, 9.8 + s.transitions.w21 + 1e-6), BinMismatch);
  const auto g = monochromatic_gate(s, 9.8, 9.8 + s.transitions.w21);
  for (int j = 0; j < 4; ++j) {
    CHECK(g.column_norms[j] <= 1.0 + 1e-12);
    CHECK(g.matrix.col(j).norm() == Approx(g.column_norms[j]).margin(1e-12));
  }
  // |1~,l> and |2~,h> scatter partly outside the two bins.
  CHECK(g.leaks);
  CHECK(g.column_norms[1] == Approx(1.0).margin(1e-12));
  CHECK(g.column_norms[2] == Approx(1.0).margin(1e-12));
}
