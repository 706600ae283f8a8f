#include <catch_amalgamated.hpp>

#include <sstream>

#include "apgate/drive_control.hpp"
#include "apgate/errors.hpp"
#include "apgate/pulse.hpp"
#include "apgate/time_domain.hpp"

using namespace apgate;
using Catch::Approx;

namespace {

double max_difference(const XiMatrix& a, const XiMatrix& b) {
  return std::max({std::abs(a.xi11 - b.xi11), std::abs(a.xi12 - b.xi12),
                   std::abs(a.xi21 - b.xi21), std::abs(a.xi22 - b.xi22)});
}

// integral |f(w)|^2 xi(w) dw on a dense grid around the carrier
XiMatrix pulse_averaged(const DressedSpectrum& s, double carrier, double length) {
  const std::size_t n = 8193;
  const double half = 40.0 / length;
  const double h = 2 * half / (n - 1);
  std::vector<Complex> v11(n), v12(n), v21(n), v22(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double nu = carrier - half + h * i;
    const double f = pulse_amplitude(2 * kPi * (nu - carrier), length);
    const auto xi = xi_matrix(s, nu);
    v11[i] = f * f * xi.xi11;
    v12[i] = f * f * xi.xi12;
    v21[i] = f * f * xi.xi21;
    v22[i] = f * f * xi.xi22;
  }
  const double step = 2 * kPi * h;
  return {simpson(v11, step), simpson(v12, step), simpson(v21, step), simpson(v22, step), carrier};
}

}  // namespace

TEST_CASE("time-domain integration reproduces xi at the carriers for l = 50 / kappa") {
  SystemParams p;
  const double length = 50.0 / p.resonator_linewidth;
  const auto [rs1, rs2] = sqrt_swap_points(p, 0.125);
  const auto sw = swap_point(p, 0.125);
  for (const auto* wp : {&sw, &rs1, &rs2}) {
    const auto s = dressed_spectrum(p, wp->drive);
    for (double carrier : {wp->carrier_l, wp->carrier_h}) {
      const auto r = time_domain_oracle(p, wp->drive, PulseSpec::make(carrier, length));
      CHECK(max_difference(r.extracted, xi_matrix(s, carrier)) < 1e-3);
      CHECK(r.norm_drift < 1e-6);
    }
  }
}

TEST_CASE("at the reference pulse length the oracle matches the pulse-averaged closed form") {
  SystemParams p;
  const double length = 1738.0;
  const auto sw = swap_point(p, 0.125);
  const auto s = dressed_spectrum(p, sw.drive);
  for (double carrier : {sw.carrier_l, sw.carrier_h}) {
    const auto r = time_domain_oracle(p, sw.drive, PulseSpec::make(carrier, length));
    CHECK(max_difference(r.extracted, pulse_averaged(s, carrier, length)) < 1e-5);
    // the pointwise value differs at second order in the pulse bandwidth
    const double estimate = 4 * std::pow(kPi / (2 * kPi * p.resonator_linewidth * length), 2);
    const double pointwise = max_difference(r.extracted, xi_matrix(s, carrier));
    CHECK(pointwise > 0.5 * estimate);
    CHECK(pointwise < 1.5 * estimate);
  }
}

TEST_CASE("probability balance per dressed sector") {
  SystemParams p;
  const auto sw = swap_point(p, 0.125);
  const auto r = time_domain_oracle(p, sw.drive, PulseSpec::make(sw.carrier_h, 500.0));
  CHECK(r.input_norm == Approx(1.0).margin(1e-6));
  CHECK(r.sector1_balance == Approx(r.input_norm).margin(1e-6));
  CHECK(r.sector2_balance == Approx(r.input_norm).margin(1e-6));
  CHECK(std::norm(r.extracted.xi11) + std::norm(r.extracted.xi12) <= 1.0 + 1e-6);
}

TEST_CASE("output bins follow the input superposition") {
  SystemParams p;
  const auto sw = swap_point(p, 0.125);
  const Complex alpha(0.6, 0.0), beta(0.0, 0.8);
  const auto r = time_domain_oracle(p, sw.drive, PulseSpec::make(sw.carrier_l, 800.0), alpha, beta);
  CHECK(std::abs(r.bins.one_same - alpha * r.extracted.xi11) < 1e-15);
  CHECK(std::abs(r.bins.two_same - beta * r.extracted.xi22) < 1e-15);
  CHECK(std::abs(r.bins.one_up - beta * r.extracted.xi21) < 1e-15);
}

TEST_CASE("a forced coarse step is caught by the norm check") {
  SystemParams p;
  const auto sw = swap_point(p, 0.125);
  TimeDomainOptions options;
  options.max_step = 0.0;
  options.norm_tolerance = 1e-14;
  CHECK_THROWS_AS(time_domain_oracle(p, sw.drive, PulseSpec::make(sw.carrier_l, 300.0), 1.0, 0.0,
                                     options),
                  GridTooCoarse);
}

TEST_CASE("trace output") {
  SystemParams p;
  const auto sw = swap_point(p, 0.125);
  TimeDomainOptions options;
  options.trace_stride = 1000;
  const auto r = time_domain_oracle(p, sw.drive, PulseSpec::make(sw.carrier_l, 300.0), 1.0, 0.0, options);
  REQUIRE(r.trace.size() > 2);
  CHECK(r.trace.front().t == Approx(-150.0));
  std::ostringstream csv;
  write_trace_csv(csv, r);
  CHECK(csv.str().rfind("t_ns,abs_s13", 0) == 0);
  CHECK_THROWS_AS(time_domain_oracle(p, sw.drive, PulseSpec::make(sw.carrier_l, 0.0)), ConfigError);
}
