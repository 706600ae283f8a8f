#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apgate/core_model.hpp"
#include "apgate/gates.hpp"
#include "apgate/scattering.hpp"

namespace apgate {

struct GateTarget {
  GateKind kind = GateKind::swap;
  double delta_nu = 0.125;  // bin spacing w~_21 / 2pi, GHz
};

struct WorkingPoint {
  DrivePoint drive;
  double carrier_l = 0.0;
  double carrier_h = 0.0;
  GateKind kind = GateKind::swap;
  double delta_nu = 0.0;
  MonochromaticGate predicted;
  /// Set when a non-target transition sits within shadow_factor * kappa of
  /// a carrier (parasitic excitation region).
  bool degraded = false;
  std::vector<std::string> degradation;
};

struct DriveControlOptions {
  double shadow_factor = 5.0;
  double root_tolerance = 1e-10;   // GHz in nu_d
  double residual_tolerance = 1e-6;  // rad
  int scan_samples = 400;
};

/// 4 Omega^2 - (w_a - w_d)(w_d - w_a + 2 chi); zero on the impedance-matching
/// ellipse (theta_t = pi/4). GHz^2.
double impedance_residual(const SystemParams& params, const DrivePoint& drive);

/// Omega_d on the constant-dw ellipse at the given drive frequency.
/// Throws NoSolution if |nu_a - nu_d| > delta_nu.
DrivePoint constant_dw_ellipse(const SystemParams& params, double delta_nu, double drive_freq);

/// Intersection of the impedance-matching and constant-dw ellipses, with
/// carriers w*_l = w~_32 and w*_h = w~_31. Throws DeltaOmegaTooLarge unless
/// 0 < delta_nu < 2 chi.
WorkingPoint swap_point(const SystemParams& params, double delta_nu,
                        const DriveControlOptions& options = {});

/// Drive off at nu_d = nu_a - delta_nu; carriers inherited from P_sw.
WorkingPoint identity_point(const SystemParams& params, double delta_nu,
                            const DriveControlOptions& options = {});

/// P_rs1 and P_rs2 on the constant-dw ellipse with carriers frozen at the
/// P_sw values. P_rs1 realizes the upper-sign pattern
/// |1~,w_h> -> (1-i)/2 |1~,w_h> + (1+i)/2 |2~,w_l>.
std::pair<WorkingPoint, WorkingPoint> sqrt_swap_points(const SystemParams& params, double delta_nu,
                                                       const DriveControlOptions& options = {});

WorkingPoint solve_working_point(const SystemParams& params, const GateTarget& target,
                                 const DriveControlOptions& options = {});

/// Working point for an explicit drive with the P_sw carriers.
WorkingPoint working_point_at(const SystemParams& params, GateKind kind, double delta_nu,
                              const DrivePoint& drive, const DriveControlOptions& options = {});

/// Phase of xi11(w*_h) after rotating the global phase so that the
/// |1~,w_l> -> |1~,w_l> amplitude is real positive.
double sqrt_swap_phase(const SystemParams& params, const DrivePoint& drive, double carrier_l,
                       double carrier_h);

/// Multiply all amplitudes by the phase that makes matrix(0,0) real positive.
GateMatrix normalize_global_phase(const GateMatrix& matrix);

}  // namespace apgate
