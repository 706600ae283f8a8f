#include "apgate/fidelity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "apgate/errors.hpp"
#include "apgate/pulse.hpp"
#include "apgate/scattering.hpp"

namespace apgate {

DecayedDressedPair decayed_dressed_pair(double theta_l, double gate_time, double lifetime) {
  const double survive =
      lifetime == kInfiniteLifetime ? 1.0 : std::exp(-gate_time / (2.0 * lifetime));
  const double c = std::cos(theta_l), s = std::sin(theta_l);
  // |1~'> = c|g,0> - E s|e,0>, |2~'> = s|g,0> + E c|e,0>, projected on |1~>, |2~>.
  return {{c * c + survive * s * s, s * c * (1.0 - survive)},
          {s * c * (1.0 - survive), s * s + survive * c * c}};
}

namespace {

struct Bin {
  double carrier;
  std::vector<double> freq;
  std::vector<double> amplitude;
  std::vector<XiMatrix> xi;
};

Bin make_bin(const DressedSpectrum& spectrum, double carrier, double length, double half_span,
             std::size_t points) {
  Bin bin{carrier, {}, {}, {}};
  bin.freq.resize(points);
  bin.amplitude.resize(points);
  bin.xi.resize(points);
  const double step = 2.0 * half_span / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double nu = carrier - half_span + step * static_cast<double>(i);
    bin.freq[i] = nu;
    bin.amplitude[i] = pulse_amplitude(kTwoPi * (nu - carrier), length);
    bin.xi[i] = xi_matrix(spectrum, nu);
  }
  return bin;
}

// Integral of f_target(w + shift) f_in(w) xi(w) dw over the input bin's grid.
template <typename Select>
Complex bin_overlap(const Bin& in, double target_carrier, double shift, double length,
                    Select select) {
  const std::size_t n = in.freq.size();
  std::vector<Complex> integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double target = pulse_amplitude(kTwoPi * (in.freq[i] + shift - target_carrier), length);
    integrand[i] = target * in.amplitude[i] * select(in.xi[i]);
  }
  const double step = (in.freq.back() - in.freq.front()) / static_cast<double>(n - 1);
  return simpson(integrand, kTwoPi * step);
}

GateMatrix process_matrix(const SystemParams& params, const DressedSpectrum& spectrum,
                          const WorkingPoint& point, double length, double half_span,
                          std::size_t points) {
  const Bin low = make_bin(spectrum, point.carrier_l, length, half_span, points);
  const Bin high = make_bin(spectrum, point.carrier_h, length, half_span, points);
  const double shift = spectrum.transitions.w21;
  const auto decayed = decayed_dressed_pair(spectrum.angles.theta_l, length, params.atom_lifetime);

  auto xi11 = [](const XiMatrix& x) { return x.xi11; };
  auto xi12 = [](const XiMatrix& x) { return x.xi12; };
  auto xi21 = [](const XiMatrix& x) { return x.xi21; };
  auto xi22 = [](const XiMatrix& x) { return x.xi22; };

  const Complex l11 = bin_overlap(low, point.carrier_l, 0.0, length, xi11);
  const Complex h11 = bin_overlap(high, point.carrier_h, 0.0, length, xi11);
  const Complex h12 = bin_overlap(high, point.carrier_l, -shift, length, xi12);
  const Complex l21 = bin_overlap(low, point.carrier_h, shift, length, xi21);
  const Complex l22 = bin_overlap(low, point.carrier_l, 0.0, length, xi22);
  const Complex h22 = bin_overlap(high, point.carrier_h, 0.0, length, xi22);

  GateMatrix m = GateMatrix::Zero();
  // Column j is the output for input basis state j; the atom part of each
  // term is |1~'> or |2~'> expanded on |1~>, |2~>.
  auto add = [&](int column, int photon, const std::array<double, 2>& atom, Complex amplitude) {
    for (int a = 0; a < 2; ++a) m(basis_index(a, photon), column) += atom[a] * amplitude;
  };
  add(basis_index(0, 0), 0, decayed.one, l11);
  add(basis_index(0, 1), 1, decayed.one, h11);
  add(basis_index(0, 1), 0, decayed.two, h12);
  add(basis_index(1, 0), 1, decayed.one, l21);
  add(basis_index(1, 0), 0, decayed.two, l22);
  add(basis_index(1, 1), 1, decayed.two, h22);
  return m;
}

void fill_fidelity(GateReport& report) {
  const GateMatrix target = ideal_gate(report.kind);
  report.overlaps = target.adjoint() * report.process;
  report.entanglement_fidelity = std::norm(report.overlaps.trace()) / 16.0;
  report.average_fidelity = (4.0 * report.entanglement_fidelity + 1.0) / 5.0;
  report.leakage = 1.0 - report.process.squaredNorm() / 4.0;
}

}  // namespace

GateReport gate_report(const SystemParams& params, const WorkingPoint& point, double length,
                       const QuadratureOptions& options) {
  if (!(length > 0.0) || !std::isfinite(length)) throw ConfigError("pulse length must be positive");
  if (options.points < 3 || options.points % 2 == 0) {
    throw ConfigError("quadrature needs an odd point count >= 3");
  }
  const DressedSpectrum spectrum = dressed_spectrum(params, point.drive);
  const double half_span = options.half_span > 0.0 ? options.half_span : default_half_span(length);
  if (spectral_tail_bound(kTwoPi * half_span, length) > 1e-4) {
    throw GridTooNarrow("quadrature window leaves more than 1e-4 of the pulse norm outside");
  }

  GateReport report;
  report.kind = point.kind;
  report.drive = point.drive;
  report.kappa = params.resonator_linewidth;
  report.length = length;
  report.lifetime = params.atom_lifetime;
  report.process = process_matrix(params, spectrum, point, length, half_span, options.points);
  fill_fidelity(report);

  if (options.check_convergence) {
    GateReport fine = report;
    fine.process =
        process_matrix(params, spectrum, point, length, half_span, 2 * options.points - 1);
    fill_fidelity(fine);
    report.convergence_shift = std::abs(fine.average_fidelity - report.average_fidelity);
    if (report.convergence_shift > options.tolerance) {
      std::ostringstream msg;
      msg << "doubling the quadrature grid moved F by " << report.convergence_shift << " (> "
          << options.tolerance << ")";
      throw GridTooCoarse(msg.str());
    }
  }
  return report;
}

std::vector<double> AxisRange::values() const {
  if (count < 2) throw ConfigError("sweep axes need at least 2 points");
  if (!(min > 0.0) || !(max > 0.0)) throw ConfigError("sweep ranges must be positive");
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(count - 1);
    v[i] = logarithmic ? min * std::pow(max / min, u) : min + (max - min) * u;
  }
  return v;
}

namespace {

std::string sanitize(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

Heatmap fidelity_sweep(const SystemParams& params, GateKind kind, const std::vector<double>& kappas,
                       const std::vector<double>& lengths, const SweepOptions& options) {
  if (kappas.empty() || lengths.empty()) throw ConfigError("sweep axes must not be empty");
  for (double v : kappas) {
    if (!(v > 0.0)) throw ConfigError("sweep kappa values must be positive");
  }
  for (double v : lengths) {
    if (!(v > 0.0)) throw ConfigError("sweep pulse lengths must be positive");
  }

  Heatmap map;
  map.kind = kind;
  map.kappas = kappas;
  map.lengths = lengths;
  map.cells.resize(kappas.size() * lengths.size());

  // Working points depend on kappa only (through the sqrt-SWAP roots).
  std::vector<std::optional<WorkingPoint>> points(kappas.size());
  std::vector<std::string> point_errors(kappas.size());
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    SystemParams p = params;
    p.resonator_linewidth = kappas[i];
    try {
      points[i] = solve_working_point(p, {kind, options.delta_nu}, options.drive);
    } catch (const std::exception& e) {
      point_errors[i] = e.what();
    }
  }

  auto evaluate = [&](std::size_t index) {
    const std::size_t i = index / lengths.size();
    const std::size_t j = index % lengths.size();
    SweepCell& cell = map.cells[index];
    cell.kappa = kappas[i];
    cell.length = lengths[j];
    if (!points[i]) {
      cell.fidelity = cell.leakage = std::numeric_limits<double>::quiet_NaN();
      cell.flag = sanitize(point_errors[i]);
      return;
    }
    SystemParams p = params;
    p.resonator_linewidth = kappas[i];
    try {
      const GateReport r = gate_report(p, *points[i], lengths[j], options.quadrature);
      cell.fidelity = r.average_fidelity;
      cell.leakage = r.leakage;
      if (points[i]->degraded) cell.flag = "shadowed";
    } catch (const std::exception& e) {
      cell.fidelity = cell.leakage = std::numeric_limits<double>::quiet_NaN();
      cell.flag = sanitize(e.what());
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(map.cells.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < map.cells.size(); k = next++) evaluate(k);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < map.cells.size(); ++k) {
    if (map.cells[k].fidelity > best) {
      best = map.cells[k].fidelity;
      map.argmax = k;
    }
  }
  auto& flag = map.cells[map.argmax].flag;
  flag = flag.empty() ? "argmax" : "argmax;" + flag;
  return map;
}

Heatmap fidelity_sweep(const SystemParams& params, GateKind kind, const AxisRange& kappa,
                       const AxisRange& length, const SweepOptions& options) {
  return fidelity_sweep(params, kind, kappa.values(), length.values(), options);
}

void write_heatmap_csv(std::ostream& out, const Heatmap& map) {
  out << "# gate=" << to_string(map.kind) << '\n';
  out << "kappa_ghz,l_ns,fidelity,leakage,flag\n";
  std::ostringstream row;
  row.precision(17);
  for (const auto& c : map.cells) {
    row.str("");
    row << c.kappa << ',' << c.length << ',' << c.fidelity << ',' << c.leakage << ',' << c.flag
        << '\n';
    out << row.str();
  }
}

Heatmap read_heatmap_csv(std::istream& in) {
  Heatmap map;
  std::string line;
  bool header = false;
  std::map<double, std::size_t> kappa_index, length_index;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("gate=");
      if (pos != std::string::npos) map.kind = parse_gate_kind(line.substr(pos + 5));
      continue;
    }
    if (!header) {
      if (line != "kappa_ghz,l_ns,fidelity,leakage,flag") {
        throw ConfigError("heatmap CSV: unexpected header '" + line + "'");
      }
      header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string k, l, f, leak, flag;
    std::getline(fields, k, ',');
    std::getline(fields, l, ',');
    std::getline(fields, f, ',');
    std::getline(fields, leak, ',');
    std::getline(fields, flag);
    try {
      map.cells.push_back({std::stod(k), std::stod(l), std::stod(f), std::stod(leak), flag});
    } catch (const std::exception&) {
      throw ConfigError("heatmap CSV: malformed row '" + line + "'");
    }
  }
  if (!header) throw ConfigError("heatmap CSV: missing header");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < map.cells.size(); ++i) {
    const auto& c = map.cells[i];
    if (kappa_index.emplace(c.kappa, kappa_index.size()).second) map.kappas.push_back(c.kappa);
    if (length_index.emplace(c.length, length_index.size()).second) map.lengths.push_back(c.length);
    if (c.fidelity > best) {
      best = c.fidelity;
      map.argmax = i;
    }
  }
  return map;
}

}  // namespace apgate
