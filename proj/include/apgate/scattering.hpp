#pragma once

#include <array>

#include "apgate/core_model.hpp"
#include "apgate/gates.hpp"

namespace apgate {

/// Monochromatic single-photon reflection coefficients at probe_freq.
///   |1~,w> -> xi11 |1~,w> + xi12 |2~,w - dw>
///   |2~,w> -> xi21 |1~,w + dw> + xi22 |2~,w>
struct XiMatrix {
  Complex xi11;
  Complex xi12;
  Complex xi21;
  Complex xi22;
  double probe_freq = 0.0;
};

/// Dressed-basis couplings of the resonator to the waveguide, in
/// sqrt(rad/ns) so that eta^2 is an angular decay rate.
struct CouplingTable {
  double eta31 = 0.0;
  double eta32 = 0.0;
  double eta41 = 0.0;
  double eta42 = 0.0;
};

/// probe_freq is a lab-frame photon frequency in GHz.
XiMatrix xi_matrix(const DressedSpectrum& spectrum, double probe_freq);

CouplingTable coupling_table(const DressedSpectrum& spectrum);

struct MonochromaticGate {
  GateMatrix matrix = GateMatrix::Zero();
  /// Column norms inside the two-bin space. Columns |1~,w_l> and |2~,w_h>
  /// lose |xi12(w_l)|^2 and |xi21(w_h)|^2 to bins outside it.
  std::array<double, 4> column_norms{};
  bool leaks = false;
};

/// Requires nu_h - nu_l == w~_21 within 1e-9 GHz; throws BinMismatch.
MonochromaticGate monochromatic_gate(const DressedSpectrum& spectrum, double nu_l, double nu_h);

}  // namespace apgate
