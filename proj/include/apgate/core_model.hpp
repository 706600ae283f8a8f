#pragma once

// Driven atom-resonator system: device parameters, dressed-state spectrum,
// mixing angles and radiative decay rates.
//
// Units: every frequency is an ordinary frequency nu = omega / 2pi in GHz and
// every time is in ns. Closed forms that only involve ratios of frequencies
// are evaluated directly on the GHz values.

#include <array>
#include <limits>

#include <Eigen/Dense>

namespace apgate {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInfiniteLifetime = std::numeric_limits<double>::infinity();

/// Static device parameters. Defaults are the reference device: 5 GHz atom,
/// 10 GHz resonator, 75 MHz dispersive shift, 5.236 MHz linewidth, T1 = 80 us.
struct SystemParams {
  double atom_freq = 5.0;
  double resonator_freq = 10.0;
  double dispersive_shift = 0.075;
  double resonator_linewidth = 0.005236;
  double atom_lifetime = 80000.0;  // ns; kInfiniteLifetime allowed

  /// Throws ConfigError unless chi > 0, kappa > 0 and T1 > 0 (or infinite).
  void validate() const;
  bool infinite_lifetime() const { return atom_lifetime == kInfiniteLifetime; }
};

/// Static drive on the atom: frequency nu_d and amplitude Omega_d / 2pi.
struct DrivePoint {
  double drive_freq = 0.0;
  double drive_amp = 0.0;
};

/// Throws DriveOutOfRange unless nu_a - 2 chi < nu_d < nu_a and Omega_d >= 0.
void check_drive_range(const SystemParams& params, const DrivePoint& drive);
bool drive_in_range(const SystemParams& params, const DrivePoint& drive) noexcept;

struct MixingAngles {
  double theta_l = 0.0;
  double theta_h = 0.0;
  double theta_t = 0.0;  // theta_l + theta_h
};

/// w~_ij = w~_i - w~_j for the transitions the gate cares about (GHz).
struct TransitionTable {
  double w31 = 0.0;
  double w32 = 0.0;
  double w41 = 0.0;
  double w42 = 0.0;
  double w43 = 0.0;
  double w21 = 0.0;
};

struct DressedSpectrum {
  MixingAngles angles;
  /// w~_1 .. w~_4 in the frame rotating at the drive. w~_3 and w~_4 contain
  /// the resonator frequency, so transitions into them are lab-frame
  /// photon frequencies.
  std::array<double, 4> energy{};
  TransitionTable transitions;
  double kappa = 0.0;  // bare resonator linewidth the rates derive from
  double kappa31 = 0.0;
  double kappa32 = 0.0;
  double kappa41 = 0.0;
  double kappa42 = 0.0;
  /// False when w~_2 >= w~_3, i.e. the level labeling no longer nests.
  bool nested = true;
};

MixingAngles mixing_angles(const SystemParams& params, const DrivePoint& drive);

DressedSpectrum dressed_spectrum(const SystemParams& params, const DrivePoint& drive);

/// Rows are the dressed states |1~>..|4~> expressed in the bare basis
/// {|g,0>, |e,0>, |e,1>, |g,1>}. Block diagonal and orthogonal.
Eigen::Matrix4d bare_to_dressed(const SystemParams& params, const DrivePoint& drive);

}  // namespace apgate
