#pragma once

// Trigonometric single-photon pulse and its spectral wavefunction.
//
//   f(t) = sqrt(2/l) cos(pi t / l)           for |t| < l/2
//   f(w) = sqrt(4 pi / l^3) cos((w - w*) l/2) / ((pi/l)^2 - (w - w*)^2)
//
// f(w) is normalized against dw in rad/ns. Grids are specified in GHz and
// converted with dw = 2 pi dnu.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace apgate {

struct SpectralGrid {
  double half_span = 0.0;  // GHz, on each side of the carrier
  std::size_t points = 4097;
};

struct PulseSpec {
  double carrier = 0.0;  // GHz
  double length = 0.0;   // ns
  SpectralGrid grid;

  /// Default grid: +-40 pi / l rad/ns (= 20 / l GHz), 4097 points.
  static PulseSpec make(double carrier, double length, std::size_t points = 4097);
};

/// Default half-span in GHz for a pulse of the given length.
double default_half_span(double length);

/// Real time envelope sqrt(2/l) cos(pi t/l), zero outside |t| < l/2.
double pulse_envelope(double t, double length);

/// Analytic spectral amplitude at angular detuning (rad/ns) from the
/// carrier. The removable singularities at +-pi/l are evaluated through a
/// series expansion.
double pulse_amplitude(double angular_detuning, double length);

/// Analytic upper bound on the norm outside |w - w*| > half_span (rad/ns).
double spectral_tail_bound(double angular_half_span, double length);

struct SampledSpectrum {
  std::vector<double> freq;       // GHz, lab frame
  std::vector<double> amplitude;  // normalized so the Simpson norm is 1
  double raw_norm = 0.0;          // Simpson norm before normalization
  double tail_bound = 0.0;
};

/// Throws GridTooNarrow when more than 1e-4 of the norm can lie outside the
/// grid, or when the grid is narrower than +-40 pi / l.
SampledSpectrum pulse_spectrum(const PulseSpec& spec);

/// <f_a | f_b> by Simpson quadrature over the union of both windows.
double pulse_overlap(const PulseSpec& a, const PulseSpec& b);

/// Composite Simpson rule on a uniform grid; values.size() must be odd.
double simpson(std::span<const double> values, double step);
std::complex<double> simpson(std::span<const std::complex<double>> values, double step);

}  // namespace apgate
