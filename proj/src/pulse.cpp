#include "apgate/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "apgate/core_model.hpp"
#include "apgate/errors.hpp"

namespace apgate {

double default_half_span(double length) { return 20.0 / length; }

PulseSpec PulseSpec::make(double carrier, double length, std::size_t points) {
  return {carrier, length, {default_half_span(length), points}};
}

double pulse_envelope(double t, double length) {
  if (std::abs(t) >= length / 2.0) return 0.0;
  return std::sqrt(2.0 / length) * std::cos(kPi * t / length);
}

namespace {

// sin(y) / y, series inside the patch radius around y = 0.
double sinc(double y) {
  if (std::abs(y) < kPi / 200.0) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0));
  }
  return std::sin(y) / y;
}

}  // namespace

double pulse_amplitude(double angular_detuning, double length) {
  // With x = d l / 2: f = sqrt(pi l / 4) cos(x) / ((pi/2)^2 - x^2)
  //                     = sqrt(pi l / 4) sinc(pi/2 - |x|) / (pi/2 + |x|).
  const double x = std::abs(angular_detuning) * length / 2.0;
  return std::sqrt(kPi * length / 4.0) * sinc(kPi / 2.0 - x) / (kPi / 2.0 + x);
}

double spectral_tail_bound(double angular_half_span, double length) {
  const double a = kPi / length;
  const double w = angular_half_span;
  if (w < 2.0 * a) return 1.0;
  // For |d| >= W >= 2a, d^2 - a^2 >= 3 d^2 / 4, so |f|^2 <= (4 pi / l^3)(16/9) d^-4.
  return 2.0 * (4.0 * kPi / (length * length * length)) * (16.0 / 27.0) / (w * w * w);
}

double simpson(std::span<const double> values, double step) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0) throw ConfigError("simpson: need an odd number of samples >= 3");
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) (i % 2 ? odd : even) += values[i];
  return step / 3.0 * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

std::complex<double> simpson(std::span<const std::complex<double>> values, double step) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0) throw ConfigError("simpson: need an odd number of samples >= 3");
  std::complex<double> odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) (i % 2 ? odd : even) += values[i];
  return step / 3.0 * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

SampledSpectrum pulse_spectrum(const PulseSpec& spec) {
  if (!(spec.length > 0.0)) throw ConfigError("pulse length must be positive");
  if (spec.grid.points < 3 || spec.grid.points % 2 == 0) {
    throw ConfigError("spectral grid needs an odd point count >= 3");
  }
  const double min_span = default_half_span(spec.length);
  if (spec.grid.half_span < min_span * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "spectral grid half-span " << spec.grid.half_span << " GHz is below 40 pi / l = "
        << min_span << " GHz";
    throw GridTooNarrow(msg.str());
  }
  SampledSpectrum out;
  out.tail_bound = spectral_tail_bound(kTwoPi * spec.grid.half_span, spec.length);
  if (out.tail_bound > 1e-4) throw GridTooNarrow("more than 1e-4 of the pulse norm lies outside the grid");

  const std::size_t n = spec.grid.points;
  const double step = 2.0 * spec.grid.half_span / static_cast<double>(n - 1);
  out.freq.resize(n);
  out.amplitude.resize(n);
  std::vector<double> density(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double offset = -spec.grid.half_span + step * static_cast<double>(i);
    out.freq[i] = spec.carrier + offset;
    out.amplitude[i] = pulse_amplitude(kTwoPi * offset, spec.length);
    density[i] = out.amplitude[i] * out.amplitude[i];
  }
  out.raw_norm = simpson(density, kTwoPi * step);
  const double scale = 1.0 / std::sqrt(out.raw_norm);
  for (auto& a : out.amplitude) a *= scale;
  return out;
}

double pulse_overlap(const PulseSpec& a, const PulseSpec& b) {
  const double lo = std::min(a.carrier - a.grid.half_span, b.carrier - b.grid.half_span);
  const double hi = std::max(a.carrier + a.grid.half_span, b.carrier + b.grid.half_span);
  // Keep the finer of the two native spacings.
  const double native = std::min(2.0 * a.grid.half_span / static_cast<double>(a.grid.points - 1),
                                 2.0 * b.grid.half_span / static_cast<double>(b.grid.points - 1));
  std::size_t intervals = static_cast<std::size_t>(std::ceil((hi - lo) / native));
  intervals += intervals % 2;
  const double step = (hi - lo) / static_cast<double>(intervals);
  std::vector<double> product(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double nu = lo + step * static_cast<double>(i);
    product[i] = pulse_amplitude(kTwoPi * (nu - a.carrier), a.length) *
                 pulse_amplitude(kTwoPi * (nu - b.carrier), b.length);
  }
  return simpson(product, kTwoPi * step);
}

}  // namespace apgate
