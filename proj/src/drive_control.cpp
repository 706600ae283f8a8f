#include "apgate/drive_control.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "apgate/errors.hpp"

namespace apgate {

namespace {

void check_delta_nu(const SystemParams& params, double delta_nu) {
  params.validate();
  if (!(delta_nu > 0.0)) throw ConfigError("bin spacing delta_nu must be positive");
  if (!(delta_nu < 2.0 * params.dispersive_shift)) {
    std::ostringstream msg;
    msg << "bin spacing " << delta_nu << " GHz must be below 2 chi = "
        << 2.0 * params.dispersive_shift << " GHz";
    throw DeltaOmegaTooLarge(msg.str());
  }
}

struct Carriers {
  double low;
  double high;
};

Carriers swap_carriers(const SystemParams& p, double delta_nu) {
  const double chi = p.dispersive_shift;
  const double center = p.resonator_freq - chi - std::sqrt(chi * chi - delta_nu * delta_nu / 4.0);
  return {center - delta_nu / 2.0, center + delta_nu / 2.0};
}

void assess_shadowing(const SystemParams& params, const DressedSpectrum& spectrum,
                      const DriveControlOptions& options, WorkingPoint& wp) {
  const double window = options.shadow_factor * params.resonator_linewidth;
  const auto& t = spectrum.transitions;
  struct Line {
    const char* name;
    double freq;
  };
  const Line lines[] = {{"w31", t.w31}, {"w32", t.w32}, {"w41", t.w41}, {"w42", t.w42}};
  const bool raman = wp.kind != GateKind::identity;
  for (const auto& [carrier_name, carrier, target] :
       {std::tuple{"w*_l", wp.carrier_l, "w32"}, std::tuple{"w*_h", wp.carrier_h, "w31"}}) {
    for (const auto& line : lines) {
      if (raman && std::string_view(line.name) == target) continue;
      const double gap = std::abs(carrier - line.freq);
      if (gap < window) {
        std::ostringstream msg;
        msg << line.name << " within " << gap * 1e3 << " MHz of " << carrier_name;
        wp.degradation.push_back(msg.str());
      }
    }
  }
  if (std::abs(t.w31 - t.w42) < window) wp.degradation.push_back("w31 ~ w42 coincidence");
  wp.degraded = !wp.degradation.empty();
}

WorkingPoint make_point(const SystemParams& params, GateKind kind, double delta_nu,
                        const DrivePoint& drive, Carriers carriers,
                        const DriveControlOptions& options) {
  WorkingPoint wp;
  wp.drive = drive;
  wp.kind = kind;
  wp.delta_nu = delta_nu;
  wp.carrier_l = carriers.low;
  wp.carrier_h = carriers.high;
  const DressedSpectrum spectrum = dressed_spectrum(params, drive);
  if (std::abs(spectrum.transitions.w21 - delta_nu) > 1e-10) {
    std::ostringstream msg;
    msg << "drive point gives w~21 = " << spectrum.transitions.w21
        << " GHz, not the requested bin spacing " << delta_nu << " GHz";
    throw BinMismatch(msg.str());
  }
  wp.predicted = monochromatic_gate(spectrum, carriers.low, carriers.high);
  assess_shadowing(params, spectrum, options, wp);
  return wp;
}

double wrap_phase(double phase) { return std::remainder(phase, kTwoPi); }

}  // namespace

double impedance_residual(const SystemParams& params, const DrivePoint& drive) {
  const double low = params.atom_freq - drive.drive_freq;
  const double high = drive.drive_freq - params.atom_freq + 2.0 * params.dispersive_shift;
  return 4.0 * drive.drive_amp * drive.drive_amp - low * high;
}

DrivePoint constant_dw_ellipse(const SystemParams& params, double delta_nu, double drive_freq) {
  const double detuning = params.atom_freq - drive_freq;
  if (!(std::abs(detuning) <= delta_nu)) {
    std::ostringstream msg;
    msg << "no real drive amplitude gives w~21 = " << delta_nu << " GHz at nu_d = " << drive_freq
        << " GHz (|nu_a - nu_d| > delta_nu)";
    throw NoSolution(msg.str());
  }
  return {drive_freq, 0.5 * std::sqrt(delta_nu * delta_nu - detuning * detuning)};
}

WorkingPoint swap_point(const SystemParams& params, double delta_nu,
                        const DriveControlOptions& options) {
  check_delta_nu(params, delta_nu);
  const double chi = params.dispersive_shift;
  const DrivePoint drive{
      params.atom_freq - delta_nu * delta_nu / (2.0 * chi),
      delta_nu / (4.0 * chi) * std::sqrt(4.0 * chi * chi - delta_nu * delta_nu)};
  const Carriers carriers = swap_carriers(params, delta_nu);
  WorkingPoint wp = make_point(params, GateKind::swap, delta_nu, drive, carriers, options);

  const DressedSpectrum spectrum = dressed_spectrum(params, drive);
  if (std::abs(spectrum.angles.theta_t - kPi / 4.0) > 1e-9 ||
      std::abs(spectrum.transitions.w32 - carriers.low) > 1e-9 ||
      std::abs(spectrum.transitions.w31 - carriers.high) > 1e-9) {
    throw NumericalError("swap point failed its impedance-matching self-check");
  }
  return wp;
}

WorkingPoint identity_point(const SystemParams& params, double delta_nu,
                            const DriveControlOptions& options) {
  check_delta_nu(params, delta_nu);
  const DrivePoint drive{params.atom_freq - delta_nu, 0.0};
  return make_point(params, GateKind::identity, delta_nu, drive, swap_carriers(params, delta_nu),
                    options);
}

double sqrt_swap_phase(const SystemParams& params, const DrivePoint& drive, double carrier_l,
                       double carrier_h) {
  const DressedSpectrum spectrum = dressed_spectrum(params, drive);
  const Complex low = xi_matrix(spectrum, carrier_l).xi11;
  const Complex high = xi_matrix(spectrum, carrier_h).xi11;
  return std::arg(high * std::conj(low));
}

GateMatrix normalize_global_phase(const GateMatrix& matrix) {
  const Complex ref = matrix(0, 0);
  if (std::abs(ref) == 0.0) return matrix;
  return matrix * (std::conj(ref) / std::abs(ref));
}

std::pair<WorkingPoint, WorkingPoint> sqrt_swap_points(const SystemParams& params, double delta_nu,
                                                       const DriveControlOptions& options) {
  check_delta_nu(params, delta_nu);
  const Carriers carriers = swap_carriers(params, delta_nu);
  const double nu_sw = params.atom_freq - delta_nu * delta_nu / (2.0 * params.dispersive_shift);
  const double lo = params.atom_freq - delta_nu;
  const double hi = params.atom_freq;

  auto residual = [&](double nu_d, double target) {
    const DrivePoint d = constant_dw_ellipse(params, delta_nu, nu_d);
    return wrap_phase(sqrt_swap_phase(params, d, carriers.low, carriers.high) - target);
  };

  struct Bracket {
    double a, b;
  };
  // Walk outward from P_sw. xi11(w*_h) vanishes at P_sw, where the phase
  // jumps by pi, so a bracket only counts when both ends are on the
  // continuous branch (|residual| < pi/2).
  auto scan_side = [&](double edge, double target) -> std::optional<Bracket> {
    const int n = options.scan_samples;
    double prev_x = 0.0, prev_g = 0.0;
    bool have_prev = false;
    for (int k = 1; k < n; ++k) {
      const double x = nu_sw + (edge - nu_sw) * static_cast<double>(k) / n;
      const double g = residual(x, target);
      const bool valid = std::abs(g) < kPi / 2.0;
      if (have_prev && valid) {
        if ((prev_g < 0.0) != (g < 0.0)) return Bracket{std::min(prev_x, x), std::max(prev_x, x)};
      }
      prev_x = x;
      prev_g = g;
      have_prev = valid;
    }
    return std::nullopt;
  };

  auto solve = [&](GateKind kind, double target) {
    std::optional<Bracket> best;
    for (double edge : {hi, lo}) {
      const auto bracket = scan_side(edge, target);
      if (bracket && (!best || std::abs(bracket->a - nu_sw) < std::abs(best->a - nu_sw))) {
        best = bracket;
      }
    }
    if (!best) {
      std::ostringstream msg;
      msg << "no sign change of the sqrt-SWAP phase condition for " << to_string(kind)
          << " on the constant-dw ellipse (kappa = " << params.resonator_linewidth << " GHz)";
      throw NonBracketed(msg.str());
    }
    auto f = [&](double x) { return residual(x, target); };
    auto done = [&](double a, double b) { return std::abs(b - a) <= options.root_tolerance; };
    boost::uintmax_t iterations = 200;
    const auto [a, b] = boost::math::tools::bisect(f, best->a, best->b, done, iterations);
    const double root = 0.5 * (a + b);
    const double g = f(root);
    if (std::abs(g) > options.residual_tolerance) {
      std::ostringstream msg;
      msg << to_string(kind) << ": phase residual " << g << " rad after " << iterations
          << " bisection steps";
      throw NoConvergence(msg.str());
    }
    return make_point(params, kind, delta_nu, constant_dw_ellipse(params, delta_nu, root), carriers,
                      options);
  };

  return {solve(GateKind::sqrt_swap_1, -kPi / 4.0), solve(GateKind::sqrt_swap_2, kPi / 4.0)};
}

WorkingPoint solve_working_point(const SystemParams& params, const GateTarget& target,
                                 const DriveControlOptions& options) {
  switch (target.kind) {
    case GateKind::swap: return swap_point(params, target.delta_nu, options);
    case GateKind::identity: return identity_point(params, target.delta_nu, options);
    case GateKind::sqrt_swap_1: return sqrt_swap_points(params, target.delta_nu, options).first;
    case GateKind::sqrt_swap_2: return sqrt_swap_points(params, target.delta_nu, options).second;
  }
  throw ConfigError("unknown gate kind");
}

WorkingPoint working_point_at(const SystemParams& params, GateKind kind, double delta_nu,
                              const DrivePoint& drive, const DriveControlOptions& options) {
  check_delta_nu(params, delta_nu);
  return make_point(params, kind, delta_nu, drive, swap_carriers(params, delta_nu), options);
}

}  // namespace apgate
