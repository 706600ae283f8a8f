#pragma once

// Pulsed-photon gate simulation: output states for the four logical inputs,
// overlaps with the ideal outputs, entanglement and average gate fidelity,
// and (kappa, l) sweeps.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "apgate/core_model.hpp"
#include "apgate/drive_control.hpp"
#include "apgate/gates.hpp"

namespace apgate {

/// |1~'> and |2~'> after T1 decay over the gate time, written in the
/// {|1~>, |2~>} basis. The decayed part is outside the computational space.
struct DecayedDressedPair {
  std::array<double, 2> one{};
  std::array<double, 2> two{};
};

DecayedDressedPair decayed_dressed_pair(double theta_l, double gate_time, double lifetime);

struct QuadratureOptions {
  std::size_t points = 4097;
  /// Half-span per bin in GHz; 0 selects +-40 pi / l.
  double half_span = 0.0;
  /// Re-evaluate with 2 * points - 1 and require |dF| <= tolerance.
  bool check_convergence = true;
  double tolerance = 1e-4;
};

struct GateReport {
  /// M_ij = <basis_i | out_j> over the computational subspace.
  GateMatrix process = GateMatrix::Zero();
  /// <ideal_out_i | out_j> = (U^dag M)_ij.
  GateMatrix overlaps = GateMatrix::Zero();
  double entanglement_fidelity = 0.0;
  double average_fidelity = 0.0;
  double leakage = 0.0;
  /// |F(2N-1 points) - F(N points)|, or 0 when not checked.
  double convergence_shift = 0.0;

  GateKind kind = GateKind::swap;
  DrivePoint drive;
  double kappa = 0.0;
  double length = 0.0;
  double lifetime = 0.0;
};

/// Gate time equals the pulse length. Throws GridTooCoarse when doubling
/// the quadrature moves F by more than the tolerance.
GateReport gate_report(const SystemParams& params, const WorkingPoint& point, double length,
                       const QuadratureOptions& options = {});

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 2;
  bool logarithmic = true;

  std::vector<double> values() const;
};

struct SweepCell {
  double kappa = 0.0;
  double length = 0.0;
  double fidelity = 0.0;
  double leakage = 0.0;
  std::string flag;
};

struct Heatmap {
  GateKind kind = GateKind::swap;
  std::vector<double> kappas;
  std::vector<double> lengths;
  /// Row-major over (kappa, length).
  std::vector<SweepCell> cells;
  std::size_t argmax = 0;
};

struct SweepOptions {
  double delta_nu = 0.125;
  unsigned threads = 0;  // 0: hardware concurrency
  QuadratureOptions quadrature;
  DriveControlOptions drive;
};

/// Cells are evaluated independently and written to their own slots, so the
/// result does not depend on scheduling. Failed cells hold NaN and the error
/// text in `flag`.
Heatmap fidelity_sweep(const SystemParams& params, GateKind kind, const std::vector<double>& kappas,
                       const std::vector<double>& lengths, const SweepOptions& options = {});
Heatmap fidelity_sweep(const SystemParams& params, GateKind kind, const AxisRange& kappa,
                       const AxisRange& length, const SweepOptions& options = {});

/// Header `kappa_ghz,l_ns,fidelity,leakage,flag`, one row per cell.
/// Lines starting with '#' are metadata.
void write_heatmap_csv(std::ostream& out, const Heatmap& map);
Heatmap read_heatmap_csv(std::istream& in);

}  // namespace apgate
