#pragma once

// Reference computations assembled directly from the model definitions,
// without going through the library's closed forms.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

constexpr double pi = 3.14159265358979323846;

/// Rotating-frame atom-resonator Hamiltonian on {|g,0>, |e,0>, |g,1>, |e,1>}, GHz.
inline Eigen::Matrix4d hamiltonian(double nu_a, double nu_r, double chi, double nu_d,
                                   double omega) {
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(1, 1) = nu_a - nu_d;
  h(2, 2) = nu_r;
  h(3, 3) = nu_a - nu_d + nu_r - 2.0 * chi;
  h(0, 1) = h(1, 0) = omega;
  h(2, 3) = h(3, 2) = omega;
  return h;
}

/// Trigonometric pulse in time, unit norm on [-l/2, l/2].
inline double pulse_time(double t, double l) {
  return std::abs(t) <= l / 2.0 ? std::sqrt(2.0 / l) * std::cos(pi * t / l) : 0.0;
}

/// (1/sqrt(2 pi)) * integral f(t) exp(i w t) dt by Simpson on n intervals.
inline double pulse_fourier(double w, double l, int n = 4000) {
  const double h = l / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = -l / 2.0 + h * i;
    const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += weight * pulse_time(t, l) * std::cos(w * t);
  }
  return sum * h / 3.0 / std::sqrt(2.0 * pi);
}

/// <f_l | f_h> for identical pulses whose carriers differ by dw (rad/ns).
inline double pulse_overlap(double dw, double l) {
  const double u = dw * l / 2.0;
  if (std::abs(u) < 1e-12) return 1.0;
  if (std::abs(std::abs(u) - pi) < 1e-12) return 0.5;
  return std::sin(u) / u * pi * pi / (pi * pi - u * u);
}

}  // namespace oracle
