#include "apgate/time_domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <sstream>

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include "apgate/errors.hpp"

namespace apgate {

namespace {

// s13, s14, s23, s24, then running integrals: photon norm out of each
// sector, input norm, and the four bin projections.
enum Slot { S13, S14, S23, S24, NOut1, NOut2, NIn, X11, X12, X21, X22, kSlots };
using State = std::array<Complex, kSlots>;

struct Outputs {
  Complex o11, o12, o21, o22;
};

struct Model {
  CouplingTable eta;
  // Carrier-frame decay-detuning factors -i (w~_ji - w) - kappa/2, rad/ns.
  Complex g31, g41, g32, g42;
  double length;

  Outputs outputs(const State& x, double p) const {
    const Complex i(0.0, 1.0);
    return {p - i * (eta.eta31 * x[S13] + eta.eta41 * x[S14]),
            -i * (eta.eta32 * x[S13] + eta.eta42 * x[S14]),
            -i * (eta.eta31 * x[S23] + eta.eta41 * x[S24]),
            p - i * (eta.eta32 * x[S23] + eta.eta42 * x[S24])};
  }

  void operator()(const State& x, State& dxdt, double t) const {
    const Complex i(0.0, 1.0);
    // The field reaching the resonator at time t is f(-t); the envelope is
    // even, so f(-t) = p(t).
    const double p = pulse_envelope(t, length);
    dxdt[S13] = g31 * x[S13] - i * eta.eta31 * p;
    dxdt[S14] = g41 * x[S14] - i * eta.eta41 * p;
    dxdt[S23] = g32 * x[S23] - i * eta.eta32 * p;
    dxdt[S24] = g42 * x[S24] - i * eta.eta42 * p;
    const Outputs o = outputs(x, p);
    dxdt[NOut1] = std::norm(o.o11) + std::norm(o.o12);
    dxdt[NOut2] = std::norm(o.o21) + std::norm(o.o22);
    dxdt[NIn] = p * p;
    dxdt[X11] = p * o.o11;
    dxdt[X12] = p * o.o12;
    dxdt[X21] = p * o.o21;
    dxdt[X22] = p * o.o22;
  }
};

}  // namespace

TimeDomainResult time_domain_oracle(const SystemParams& params, const DrivePoint& drive,
                                    const PulseSpec& pulse, Complex alpha, Complex beta,
                                    const TimeDomainOptions& options) {
  if (!(pulse.length > 0.0)) throw ConfigError("oracle: pulse length must be positive");
  const DressedSpectrum spectrum = dressed_spectrum(params, drive);
  const auto& tr = spectrum.transitions;
  const double kappa = kTwoPi * spectrum.kappa;
  const double carrier = pulse.carrier;

  auto factor = [&](double transition) {
    return Complex(-kappa / 2.0, -kTwoPi * (transition - carrier));
  };
  Model model{coupling_table(spectrum), factor(tr.w31), factor(tr.w41), factor(tr.w32),
              factor(tr.w42), pulse.length};

  double fastest = std::max(kappa, kPi / pulse.length);
  for (double w : {tr.w31, tr.w41, tr.w32, tr.w42}) {
    fastest = std::max(fastest, kTwoPi * std::abs(w - carrier));
  }
  double step = 1.0 / (20.0 * fastest);
  if (options.max_step > 0.0) step = std::min(step, options.max_step);
  const auto pulse_steps = static_cast<std::size_t>(std::ceil(pulse.length / step));
  step = pulse.length / static_cast<double>(pulse_steps);
  const auto ring_steps =
      static_cast<std::size_t>(std::ceil(options.ringdown_lifetimes / kappa / step));

  TimeDomainResult result;
  result.step = step;
  result.steps = pulse_steps + ring_steps;

  State x{};
  double t = -pulse.length / 2.0;
  boost::numeric::odeint::runge_kutta4<State> stepper;

  auto record = [&](double time) {
    const Outputs o = model.outputs(x, pulse_envelope(time, pulse.length));
    result.trace.push_back({time, x[S13], x[S14], x[S23], x[S24], o.o11, o.o12, o.o21, o.o22});
  };
  if (options.trace_stride > 0) record(t);
  for (std::size_t n = 1; n <= result.steps; ++n) {
    stepper.do_step(model, x, t, step);
    t = -pulse.length / 2.0 + step * static_cast<double>(n);
    if (options.trace_stride > 0 && n % options.trace_stride == 0) record(t);
  }

  const double input_norm = x[NIn].real();
  result.input_norm = input_norm;
  result.sector1_balance = x[NOut1].real() + std::norm(x[S13]) + std::norm(x[S14]);
  result.sector2_balance = x[NOut2].real() + std::norm(x[S23]) + std::norm(x[S24]);
  result.norm_drift = std::max(std::abs(result.sector1_balance - input_norm),
                               std::abs(result.sector2_balance - input_norm));
  if (result.norm_drift > options.norm_tolerance) {
    std::ostringstream msg;
    msg << "time-domain oracle: norm drift " << result.norm_drift << " exceeds "
        << options.norm_tolerance << " (step " << step << " ns)";
    throw GridTooCoarse(msg.str());
  }

  auto& xi = result.extracted;
  xi.probe_freq = carrier;
  xi.xi11 = x[X11] / input_norm;
  xi.xi12 = x[X12] / input_norm;
  xi.xi21 = x[X21] / input_norm;
  xi.xi22 = x[X22] / input_norm;
  result.bins = {alpha * xi.xi11, alpha * xi.xi12, beta * xi.xi21, beta * xi.xi22};
  return result;
}

void write_trace_csv(std::ostream& out, const TimeDomainResult& result) {
  out << "t_ns,abs_s13,abs_s14,abs_s23,abs_s24,re_o11,im_o11,re_o12,im_o12,re_o21,im_o21,re_o22,"
         "im_o22\n";
  for (const auto& s : result.trace) {
    out << s.t << ',' << std::abs(s.s13) << ',' << std::abs(s.s14) << ',' << std::abs(s.s23)
        << ',' << std::abs(s.s24) << ',' << s.o11.real() << ',' << s.o11.imag() << ','
        << s.o12.real() << ',' << s.o12.imag() << ',' << s.o21.real() << ',' << s.o21.imag()
        << ',' << s.o22.real() << ',' << s.o22.imag() << '\n';
  }
}

}  // namespace apgate
