#include "apgate/core_model.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "apgate/errors.hpp"

namespace apgate {

void SystemParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(atom_freq) || !finite(resonator_freq)) {
    throw ConfigError("atom and resonator frequencies must be finite");
  }
  if (!(dispersive_shift > 0.0) || !finite(dispersive_shift)) {
    throw ConfigError("dispersive shift must be positive");
  }
  if (!(resonator_linewidth > 0.0) || !finite(resonator_linewidth)) {
    throw ConfigError("resonator linewidth must be positive");
  }
  if (!(atom_lifetime > 0.0)) {
    throw ConfigError("atom lifetime must be positive or infinite");
  }
}

bool drive_in_range(const SystemParams& params, const DrivePoint& drive) noexcept {
  const double lo = params.atom_freq - 2.0 * params.dispersive_shift;
  return std::isfinite(drive.drive_freq) && std::isfinite(drive.drive_amp) &&
         drive.drive_amp >= 0.0 && drive.drive_freq > lo && drive.drive_freq < params.atom_freq;
}

void check_drive_range(const SystemParams& params, const DrivePoint& drive) {
  params.validate();
  if (drive_in_range(params, drive)) return;
  std::ostringstream msg;
  msg << "drive (nu_d = " << drive.drive_freq << " GHz, Omega_d/2pi = " << drive.drive_amp
      << " GHz) outside the gate range nu_a - 2 chi < nu_d < nu_a = ("
      << params.atom_freq - 2.0 * params.dispersive_shift << ", " << params.atom_freq
      << "), Omega_d >= 0";
  throw DriveOutOfRange(msg.str());
}

namespace {

// Detunings of the two 2x2 blocks: (w_a - w_d) for {|g,0>,|e,0>} and
// (w_d - w_a + 2 chi) for {|e,1>,|g,1>}.
struct BlockDetunings {
  double low;
  double high;
};

BlockDetunings block_detunings(const SystemParams& p, const DrivePoint& d) {
  return {p.atom_freq - d.drive_freq, d.drive_freq - p.atom_freq + 2.0 * p.dispersive_shift};
}

MixingAngles angles_unchecked(const SystemParams& p, const DrivePoint& d) {
  const auto det = block_detunings(p, d);
  MixingAngles a;
  a.theta_l = 0.5 * std::arg(std::complex<double>(det.low / 2.0, d.drive_amp));
  a.theta_h = 0.5 * std::arg(std::complex<double>(det.high / 2.0, d.drive_amp));
  a.theta_t = a.theta_l + a.theta_h;
  return a;
}

}  // namespace

MixingAngles mixing_angles(const SystemParams& params, const DrivePoint& drive) {
  check_drive_range(params, drive);
  return angles_unchecked(params, drive);
}

DressedSpectrum dressed_spectrum(const SystemParams& params, const DrivePoint& drive) {
  check_drive_range(params, drive);
  const auto det = block_detunings(params, drive);
  const double omega = drive.drive_amp;

  DressedSpectrum s;
  s.angles = angles_unchecked(params, drive);

  const double half_low = det.low / 2.0;
  const double half_high = det.high / 2.0;
  const double r_low = std::hypot(half_low, omega);
  const double r_high = std::hypot(half_high, omega);
  s.energy = {half_low - r_low, half_low + r_low, params.resonator_freq - half_high - r_high,
              params.resonator_freq - half_high + r_high};

  auto& t = s.transitions;
  t.w31 = s.energy[2] - s.energy[0];
  t.w32 = s.energy[2] - s.energy[1];
  t.w41 = s.energy[3] - s.energy[0];
  t.w42 = s.energy[3] - s.energy[1];
  t.w43 = 2.0 * r_high;
  t.w21 = 2.0 * r_low;

  const double sin_t = std::sin(s.angles.theta_t);
  const double cos_t = std::cos(s.angles.theta_t);
  s.kappa = params.resonator_linewidth;
  s.kappa32 = s.kappa41 = s.kappa * cos_t * cos_t;
  s.kappa31 = s.kappa42 = s.kappa * sin_t * sin_t;

  s.nested = s.energy[1] < s.energy[2];
  return s;
}

Eigen::Matrix4d bare_to_dressed(const SystemParams& params, const DrivePoint& drive) {
  const auto a = mixing_angles(params, drive);
  const double cl = std::cos(a.theta_l), sl = std::sin(a.theta_l);
  const double ch = std::cos(a.theta_h), sh = std::sin(a.theta_h);
  Eigen::Matrix4d m;
  // clang-format off
  m << cl, -sl, 0.0, 0.0,
       sl,  cl, 0.0, 0.0,
       0.0, 0.0, ch, -sh,
       0.0, 0.0, sh,  ch;
  // clang-format on
  return m;
}

}  // namespace apgate
