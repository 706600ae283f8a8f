#include "apgate/scattering.hpp"

#include <cmath>
#include <sstream>

#include "apgate/errors.hpp"

namespace apgate {

namespace {

// kappa / (kappa/2 - i (nu - transition)); the 2 pi of angular units cancels.
Complex lorentzian(double kappa, double probe, double transition) {
  return kappa / Complex(kappa / 2.0, -(probe - transition));
}

}  // namespace

XiMatrix xi_matrix(const DressedSpectrum& spectrum, double probe_freq) {
  if (std::isnan(probe_freq)) throw ConfigError("xi_matrix: probe frequency is NaN");
  const double k = spectrum.kappa;
  const double s = std::sin(spectrum.angles.theta_t);
  const double c = std::cos(spectrum.angles.theta_t);
  const auto& t = spectrum.transitions;

  const Complex l31 = lorentzian(k, probe_freq, t.w31);
  const Complex l41 = lorentzian(k, probe_freq, t.w41);
  const Complex l32 = lorentzian(k, probe_freq, t.w32);
  const Complex l42 = lorentzian(k, probe_freq, t.w42);

  XiMatrix xi;
  xi.probe_freq = probe_freq;
  xi.xi11 = 1.0 - s * s * l31 - c * c * l41;
  xi.xi12 = s * c * (l31 - l41);
  xi.xi21 = s * c * (l32 - l42);
  xi.xi22 = 1.0 - c * c * l32 - s * s * l42;
  return xi;
}

CouplingTable coupling_table(const DressedSpectrum& spectrum) {
  const double root_kappa = std::sqrt(kTwoPi * spectrum.kappa);
  const double s = std::sin(spectrum.angles.theta_t);
  const double c = std::cos(spectrum.angles.theta_t);
  return {.eta31 = -root_kappa * s,
          .eta32 = root_kappa * c,
          .eta41 = root_kappa * c,
          .eta42 = root_kappa * s};
}

MonochromaticGate monochromatic_gate(const DressedSpectrum& spectrum, double nu_l, double nu_h) {
  const double spacing = nu_h - nu_l;
  if (!(std::abs(spacing - spectrum.transitions.w21) <= 1e-9)) {
    std::ostringstream msg;
    msg << "bin spacing " << spacing << " GHz does not match the Raman shift w~21 = "
        << spectrum.transitions.w21 << " GHz";
    throw BinMismatch(msg.str());
  }
  const XiMatrix at_l = xi_matrix(spectrum, nu_l);
  const XiMatrix at_h = xi_matrix(spectrum, nu_h);

  MonochromaticGate g;
  auto& m = g.matrix;
  const int one_l = basis_index(0, 0), one_h = basis_index(0, 1);
  const int two_l = basis_index(1, 0), two_h = basis_index(1, 1);

  // |1~,w_l>: the Raman branch lands at w_l - dw, outside the two bins.
  m(one_l, one_l) = at_l.xi11;
  m(one_h, one_h) = at_h.xi11;
  m(two_l, one_h) = at_h.xi12;
  m(one_h, two_l) = at_l.xi21;
  m(two_l, two_l) = at_l.xi22;
  // |2~,w_h>: the Raman branch lands at w_h + dw.
  m(two_h, two_h) = at_h.xi22;

  for (int j = 0; j < 4; ++j) g.column_norms[j] = m.col(j).norm();
  g.leaks = std::norm(at_l.xi12) > 1e-12 || std::norm(at_h.xi21) > 1e-12;
  return g;
}

}  // namespace apgate
