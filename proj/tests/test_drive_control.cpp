#include <catch_amalgamated.hpp>

#include <chrono>

#include "apgate/drive_control.hpp"
#include "apgate/errors.hpp"

using namespace apgate;
using Catch::Approx;

namespace {

// Raman block of a monochromatic gate with the global phase removed.
Eigen::Matrix2cd raman_block(const WorkingPoint& wp) {
  const GateMatrix m = normalize_global_phase(wp.predicted.matrix);
  const int one_h = basis_index(0, 1), two_l = basis_index(1, 0);
  Eigen::Matrix2cd b;
  b << m(one_h, one_h), m(one_h, two_l), m(two_l, one_h), m(two_l, two_l);
  return b;
}

}  // namespace

TEST_CASE("SWAP drive point and carriers for the reference device") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto wp = swap_point(SystemParams{}, 0.125);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(wp.drive.drive_freq == Approx(4.896).margin(1e-3));
  CHECK(wp.drive.drive_amp * 1e3 == Approx(34.55).margin(1e-2));
  CHECK(wp.carrier_l == Approx(9.821).margin(1e-3));
  CHECK(wp.carrier_h == Approx(9.946).margin(1e-3));
  CHECK(seconds < 1.0);
}

TEST_CASE("SWAP point closed form lies on both ellipses") {
  SystemParams p;
  for (double dnu : {0.05, 0.1, 0.125, 0.14}) {
    const auto wp = swap_point(p, dnu);
    CHECK(impedance_residual(p, wp.drive) == Approx(0.0).margin(1e-12));
    const auto on_ellipse = constant_dw_ellipse(p, dnu, wp.drive.drive_freq);
    CHECK(on_ellipse.drive_amp == Approx(wp.drive.drive_amp).margin(1e-12));
    const auto s = dressed_spectrum(p, wp.drive);
    CHECK(s.angles.theta_t == Approx(kPi / 4).margin(1e-12));
    CHECK(wp.carrier_l == Approx(s.transitions.w32).margin(1e-9));
    CHECK(wp.carrier_h == Approx(s.transitions.w31).margin(1e-9));
    CHECK(wp.carrier_h - wp.carrier_l == Approx(dnu).margin(1e-12));
  }
}

TEST_CASE("bin spacing at or above 2 chi has no SWAP point") {
  SystemParams p;
  CHECK_THROWS_AS(swap_point(p, 0.15), DeltaOmegaTooLarge);
  CHECK_THROWS_AS(swap_point(p, 0.2), DeltaOmegaTooLarge);
  CHECK_THROWS_AS(swap_point(p, -0.1), ConfigError);
  CHECK_THROWS_AS(constant_dw_ellipse(p, 0.125, 4.86), NoSolution);
}

TEST_CASE("identity point switches the drive off and keeps the SWAP carriers") {
  SystemParams p;
  const auto id = identity_point(p, 0.125);
  const auto sw = swap_point(p, 0.125);
  CHECK(id.drive.drive_amp == 0.0);
  CHECK(id.drive.drive_freq == Approx(4.875));
  CHECK(id.carrier_l == sw.carrier_l);
  CHECK(id.carrier_h == sw.carrier_h);
  const auto s = dressed_spectrum(p, id.drive);
  CHECK(std::abs(s.transitions.w32 - id.carrier_l) == Approx(0.029).margin(1e-3));
  const GateMatrix m = id.predicted.matrix;
  CHECK(std::abs(m(basis_index(1, 0), basis_index(0, 1))) < 1e-12);
  CHECK_FALSE(id.degraded);
}

TEST_CASE("sqrt-SWAP points give equal-weight Raman splitting with +-pi/4 phases") {
  SystemParams p;
  const auto [rs1, rs2] = sqrt_swap_points(p, 0.125);
  const auto sw = swap_point(p, 0.125);
  CHECK(rs1.drive.drive_freq > sw.drive.drive_freq);
  CHECK(rs2.drive.drive_freq < sw.drive.drive_freq);
  CHECK(rs2.drive.drive_freq > p.atom_freq - 0.125);
  CHECK(rs1.drive.drive_freq == Approx(4.89912).margin(1e-5));
  CHECK(rs2.drive.drive_freq == Approx(4.89324).margin(1e-5));
  CHECK(sqrt_swap_phase(p, rs1.drive, rs1.carrier_l, rs1.carrier_h) ==
        Approx(-kPi / 4).margin(1e-6));
  CHECK(sqrt_swap_phase(p, rs2.drive, rs2.carrier_l, rs2.carrier_h) ==
        Approx(kPi / 4).margin(1e-6));

  for (const auto* wp : {&rs1, &rs2}) {
    CHECK(wp->carrier_l == sw.carrier_l);
    const auto b = raman_block(*wp);
    const auto target = normalize_global_phase(ideal_gate(wp->kind));
    // carriers are frozen at the SWAP values, so the split is only close to even
    CHECK(std::abs(b(0, 0)) == Approx(std::sqrt(0.5)).margin(5e-2));
    CHECK(std::abs(b(1, 0)) == Approx(std::sqrt(0.5)).margin(5e-2));
    CHECK(std::abs(b(0, 0) - target(basis_index(0, 1), basis_index(0, 1))) < 5e-2);
    CHECK(std::abs(b(1, 0) - target(basis_index(1, 0), basis_index(0, 1))) < 5e-2);
  }
}

TEST_CASE("sqrt-SWAP squared approaches SWAP on the Raman block") {
  SystemParams p;
  const auto [rs1, rs2] = sqrt_swap_points(p, 0.125);
  auto spectral_norm = [](const Eigen::Matrix2cd& m) {
    return Eigen::JacobiSVD<Eigen::Matrix2cd>(m).singularValues()(0);
  };
  for (const auto* wp : {&rs1, &rs2}) {
    const auto b = raman_block(*wp);
    const GateMatrix ideal = normalize_global_phase(ideal_gate(wp->kind));
    Eigen::Matrix2cd u;
    u << ideal(1, 1), ideal(1, 2), ideal(2, 1), ideal(2, 2);
    Eigen::Matrix2cd swap;
    swap << 0, 1, 1, 0;
    CHECK((u * u - swap).norm() < 1e-15);
    // b^2 - u^2 = b (b - u) + (b - u) u with |b|, |u| <= 1
    const double err = spectral_norm(b - u);
    CHECK(spectral_norm(b) <= 1.0 + 1e-12);
    CHECK(spectral_norm(b * b - u * u) <= 2.0 * err + 1e-12);
    CHECK(err < 0.1);
    const Eigen::Matrix2cd sq = b * b;
    CHECK(std::abs(sq(1, 0)) > 0.99);
    CHECK(std::abs(sq(0, 0)) < 0.1);
  }
}

TEST_CASE("solver dispatch and explicit drive points") {
  SystemParams p;
  CHECK(solve_working_point(p, {GateKind::swap, 0.125}).drive.drive_freq ==
        Approx(4.895833333).margin(1e-9));
  CHECK(solve_working_point(p, {GateKind::identity, 0.125}).drive.drive_amp == 0.0);
  const auto rs = solve_working_point(p, {GateKind::sqrt_swap_2, 0.125});
  CHECK(rs.kind == GateKind::sqrt_swap_2);
  // off the constant-dw ellipse the bins no longer match
  CHECK_THROWS_AS(working_point_at(p, GateKind::swap, 0.125, {4.9, 0.01}), BinMismatch);
  const auto on = constant_dw_ellipse(p, 0.125, 4.9);
  CHECK_NOTHROW(working_point_at(p, GateKind::swap, 0.125, on));
}

TEST_CASE("transitions near a carrier are flagged as shadowed") {
  SystemParams p;
  const auto far = working_point_at(p, GateKind::swap, 0.125, constant_dw_ellipse(p, 0.125, 4.925));
  CHECK(far.degraded);
  bool coincidence = false;
  for (const auto& reason : far.degradation) coincidence |= reason.find("w31 ~ w42") != std::string::npos;
  CHECK(coincidence);
  CHECK_FALSE(swap_point(p, 0.125).degraded);
}

TEST_CASE("global phase normalization") {
  GateMatrix m = GateMatrix::Identity() * Complex(0.0, 1.0);
  const auto n = normalize_global_phase(m);
  CHECK(std::abs(n(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(n(3, 3) - 1.0) < 1e-15);
}
