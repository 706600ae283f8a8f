#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "apgate/core_model.hpp"
#include "apgate/drive_control.hpp"
#include "apgate/errors.hpp"
#include "apgate/fidelity.hpp"
#include "apgate/io.hpp"
#include "apgate/network.hpp"
#include "apgate/pulse.hpp"
#include "apgate/scattering.hpp"
#include "apgate/time_domain.hpp"

namespace apgate::cli {

namespace {

struct Common {
  std::string params_file;
  std::string out;
  std::string format;
  std::optional<double> nu_a, nu_r, chi, kappa;
  std::optional<std::string> t1;
  std::optional<double> delta_nu;
};

struct Resolved {
  SystemParams params;
  double delta_nu = 0.125;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto end = std::min<std::size_t>(e.byte, text.size());
    const auto before = text.substr(0, end > 0 ? end - 1 : 0);
    const auto line = 1 + std::count(before.begin(), before.end(), '\n');
    const auto nl = before.rfind('\n');
    const auto column = before.size() - (nl == std::string::npos ? 0 : nl + 1) + 1;
    std::ostringstream msg;
    msg << path << ":" << line << ":" << column << ": invalid JSON";
    throw ConfigError(msg.str());
  }
}

double parse_lifetime(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfiniteLifetime;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("--t1: expected a lifetime in ns or 'inf', got '" + text + "'");
}

Resolved resolve(const Common& c) {
  Resolved r;
  if (!c.params_file.empty()) {
    Json file = parse_json_file(c.params_file);
    if (!file.is_object()) throw ConfigError(c.params_file + ": expected a JSON object");
    if (file.contains("delta_nu_ghz")) {
      if (!file["delta_nu_ghz"].is_number()) {
        throw ConfigError(c.params_file + ": delta_nu_ghz: expected a number");
      }
      r.delta_nu = file["delta_nu_ghz"].get<double>();
      file.erase("delta_nu_ghz");
    }
    try {
      r.params = params_from_json(file);
    } catch (const ConfigError& e) {
      throw ConfigError(c.params_file + ": " + e.what());
    }
  }
  if (c.nu_a) r.params.atom_freq = *c.nu_a;
  if (c.nu_r) r.params.resonator_freq = *c.nu_r;
  if (c.chi) r.params.dispersive_shift = *c.chi;
  if (c.kappa) r.params.resonator_linewidth = *c.kappa;
  if (c.t1) r.params.atom_lifetime = parse_lifetime(*c.t1);
  if (c.delta_nu) r.delta_nu = *c.delta_nu;
  r.params.validate();
  return r;
}

Json config_json(const std::string& command, const Resolved& r, const Json& options) {
  return {{"command", command},
          {"params", to_json(r.params)},
          {"delta_nu_ghz", r.delta_nu},
          {"options", options}};
}

std::string csv_config_header(const Json& config) { return "# config: " + config.dump() + "\n"; }

class Sink {
 public:
  Sink(const Common& c, std::ostream& fallback) : path_(c.out), fallback_(fallback) {}
  std::ostream& stream() { return path_.empty() ? fallback_ : buffer_; }
  void finish() {
    if (path_.empty()) return;
    std::ofstream file(path_);
    if (!file) throw ConfigError("cannot write '" + path_ + "'");
    file << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

std::string format_of(const Common& c, const char* fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json") throw ConfigError("--format must be csv or json");
  return f;
}

void require_json(const Common& c, const char* command) {
  if (format_of(c, "json") != "json") {
    throw ConfigError(std::string(command) + " only emits JSON");
  }
}

Json xi_json(const XiMatrix& xi) {
  return {{"nu_ghz", xi.probe_freq},
          {"xi11", complex_to_json(xi.xi11)},
          {"xi12", complex_to_json(xi.xi12)},
          {"xi21", complex_to_json(xi.xi21)},
          {"xi22", complex_to_json(xi.xi22)}};
}

Json transitions_json(const DressedSpectrum& s) {
  const auto& t = s.transitions;
  return {{"w31", t.w31}, {"w32", t.w32}, {"w41", t.w41},
          {"w42", t.w42}, {"w43", t.w43}, {"w21", t.w21}};
}

// Explicit drive if both --nu-d and --omega are given, else the solved point.
WorkingPoint point_for(const Resolved& r, GateKind kind, std::optional<double> nu_d,
                       std::optional<double> omega) {
  if (nu_d.has_value() != omega.has_value()) {
    throw ConfigError("--nu-d and --omega must be given together");
  }
  if (nu_d) return working_point_at(r.params, kind, r.delta_nu, {*nu_d, *omega});
  return solve_working_point(r.params, {kind, r.delta_nu});
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

int atom_label(const std::string& text, const std::string& field) {
  if (text == "1") return 0;
  if (text == "2") return 1;
  throw ConfigError(field + ": atom states are 1 or 2, got '" + text + "'");
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    labels.push_back(atom_label(item, "--in"));
  }
  return labels;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tunable atom-photon gate simulator"};
  app.require_subcommand(1);
  Common common;

  app.add_option("--params-file", common.params_file, "JSON with nu_a_ghz, nu_r_ghz, chi_ghz, "
                 "kappa_ghz, t1_ns, delta_nu_ghz");
  app.add_option("--out", common.out, "Output file (default stdout)");
  app.add_option("--format", common.format, "csv or json");
  app.add_option("--nu-a", common.nu_a, "Atom frequency, GHz");
  app.add_option("--nu-r", common.nu_r, "Resonator frequency, GHz");
  app.add_option("--chi", common.chi, "Dispersive shift, GHz");
  app.add_option("--kappa", common.kappa, "Resonator linewidth, GHz");
  app.add_option("--t1", common.t1, "Atom lifetime in ns, or inf");
  app.add_option("--dnu", common.delta_nu, "Bin spacing, GHz");

  // levels
  auto* levels = app.add_subcommand("levels", "Transitions and decay rates along the constant-dw ellipse");
  std::size_t level_points = 401;
  levels->add_option("--points", level_points, "Drive frequencies sampled");

  // solve
  auto* solve = app.add_subcommand("solve", "Drive point and carriers for a gate");
  std::string solve_gate;
  solve->add_option("gate", solve_gate, "swap, sqrt-swap-1, sqrt-swap-2, identity")->required();

  // xi
  auto* xi = app.add_subcommand("xi", "Monochromatic scattering coefficients");
  std::string xi_gate = "swap";
  std::optional<double> xi_nu_d, xi_omega, xi_from, xi_to;
  std::size_t xi_points = 1001;
  xi->add_option("--gate", xi_gate, "Working point supplying the drive");
  xi->add_option("--nu-d", xi_nu_d, "Explicit drive frequency, GHz");
  xi->add_option("--omega", xi_omega, "Explicit drive amplitude, GHz");
  xi->add_option("--from", xi_from, "First probe frequency, GHz");
  xi->add_option("--to", xi_to, "Last probe frequency, GHz");
  xi->add_option("--points", xi_points, "Probe frequencies");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Time-domain integration against the closed form");
  std::string oracle_gate = "swap", oracle_carrier = "l", oracle_trace;
  std::optional<double> oracle_length, oracle_nu_d, oracle_omega;
  int oracle_input = 1;
  std::size_t oracle_stride = 100;
  oracle->add_option("--gate", oracle_gate, "Working point");
  oracle->add_option("--l", oracle_length, "Pulse length, ns (default 50 / kappa)");
  oracle->add_option("--carrier", oracle_carrier, "l or h");
  oracle->add_option("--input", oracle_input, "Atom state 1 or 2");
  oracle->add_option("--nu-d", oracle_nu_d, "Explicit drive frequency, GHz");
  oracle->add_option("--omega", oracle_omega, "Explicit drive amplitude, GHz");
  oracle->add_option("--trace", oracle_trace, "Write the integration trace CSV here");
  oracle->add_option("--trace-stride", oracle_stride, "Keep every n-th step in the trace");

  // fidelity
  auto* fidelity = app.add_subcommand("fidelity", "Pulsed gate fidelity");
  std::string fid_gate = "all";
  double fid_length = 1738.0, fid_span = 0.0;
  std::size_t fid_points = 4097;
  bool fid_no_check = false;
  std::optional<double> fid_nu_d, fid_omega;
  fidelity->add_option("--gate", fid_gate, "Gate, or all");
  fidelity->add_option("--l", fid_length, "Pulse length, ns");
  fidelity->add_option("--points", fid_points, "Quadrature points per bin");
  fidelity->add_option("--half-span", fid_span, "Quadrature half-span per bin, GHz (0: auto)");
  fidelity->add_flag("--no-check", fid_no_check, "Skip the grid-doubling check");
  fidelity->add_option("--nu-d", fid_nu_d, "Explicit drive frequency, GHz");
  fidelity->add_option("--omega", fid_omega, "Explicit drive amplitude, GHz");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Fidelity heatmap over kappa and pulse length");
  std::string sweep_gate = "swap";
  AxisRange kappa_axis{0.001, 0.05, 25, true}, length_axis{100.0, 10000.0, 25, true};
  bool sweep_linear = false;
  unsigned sweep_threads = 0;
  std::size_t sweep_points = 4097;
  sweep->add_option("--gate", sweep_gate, "Gate");
  sweep->add_option("--kappa-min", kappa_axis.min, "GHz");
  sweep->add_option("--kappa-max", kappa_axis.max, "GHz");
  sweep->add_option("--kappa-n", kappa_axis.count, "Points on the kappa axis");
  sweep->add_option("--l-min", length_axis.min, "ns");
  sweep->add_option("--l-max", length_axis.max, "ns");
  sweep->add_option("--l-n", length_axis.count, "Points on the length axis");
  sweep->add_flag("--linear", sweep_linear, "Linear axes instead of logarithmic");
  sweep->add_option("--threads", sweep_threads, "Worker threads (0: all cores)");
  sweep->add_option("--points", sweep_points, "Quadrature points per bin");

  // network
  auto* network = app.add_subcommand("network", "Cascaded network run");
  std::vector<std::string> net_preset;
  std::string net_spec, net_in, net_photon = "l", net_branch = "rs1", net_mode = "ideal";
  std::vector<std::size_t> net_skip;
  double net_length = 1738.0, net_link = 1.0;
  network->add_option("preset", net_preset, "domino N | aa-sqrt-swap");
  network->add_option("--spec", net_spec, "Network spec JSON");
  network->add_option("--in", net_in, "Atom states as 1/2 labels, e.g. \"2,1\"");
  network->add_option("--photon", net_photon, "Photon bin, l or h");
  network->add_option("--branch", net_branch, "rs1 or rs2 (aa-sqrt-swap)");
  network->add_option("--mode", net_mode, "ideal, monochromatic or pulsed");
  network->add_option("--skip", net_skip, "Domino nodes switched to P_id");
  network->add_option("--l", net_length, "Pulse length for pulsed mode, ns");
  network->add_option("--link", net_link, "Photon amplitude factor per link");

  for (auto* sub : {levels, solve, xi, oracle, fidelity, sweep, network}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Resolved r = resolve(common);
    Sink sink(common, out);
    std::ostream& os = sink.stream();

    if (levels->parsed()) {
      if (level_points < 2) throw ConfigError("--points must be at least 2");
      const Json config = config_json("levels", r, {{"points", level_points}});
      const auto sw = swap_point(r.params, r.delta_nu);
      const bool csv = format_of(common, "csv") == "csv";
      Json rows = Json::array();
      if (csv) {
        os << csv_config_header(config);
        os << "nu_d,omega,w31,w32,w41,w42,k32_over_k,k31_over_k,flag\n";
      }
      for (std::size_t i = 0; i < level_points; ++i) {
        // [nu_a - dnu, nu_a): the upper end leaves the drive range.
        const double nu_d = r.params.atom_freq - r.delta_nu +
                            r.delta_nu * static_cast<double>(i) / static_cast<double>(level_points);
        const DrivePoint d = constant_dw_ellipse(r.params, r.delta_nu, nu_d);
        const DressedSpectrum s = dressed_spectrum(r.params, d);
        const WorkingPoint wp = working_point_at(r.params, GateKind::swap, r.delta_nu, d);
        std::string flag;
        for (const auto& reason : wp.degradation) flag += (flag.empty() ? "" : ";") + reason;
        if (!s.nested) flag += flag.empty() ? "not_nested" : ";not_nested";
        const double k = s.kappa;
        const auto& t = s.transitions;
        if (csv) {
          os << fmt(nu_d) << ',' << fmt(d.drive_amp) << ',' << fmt(t.w31) << ',' << fmt(t.w32) << ','
             << fmt(t.w41) << ',' << fmt(t.w42) << ',' << fmt(s.kappa32 / k) << ','
             << fmt(s.kappa31 / k) << ',' << flag << '\n';
        } else {
          rows.push_back({{"nu_d", nu_d}, {"omega", d.drive_amp}, {"w31", t.w31},
                          {"w32", t.w32}, {"w41", t.w41}, {"w42", t.w42},
                          {"k32_over_k", s.kappa32 / k}, {"k31_over_k", s.kappa31 / k},
                          {"flag", flag}});
        }
      }
      if (!csv) {
        os << Json{{"config", config},
                   {"carriers", {sw.carrier_l, sw.carrier_h}},
                   {"rows", rows}}.dump(2)
           << '\n';
      }
    } else if (solve->parsed()) {
      require_json(common, "solve");
      const GateKind kind = parse_gate_kind(solve_gate);
      const WorkingPoint wp = solve_working_point(r.params, {kind, r.delta_nu});
      const DressedSpectrum s = dressed_spectrum(r.params, wp.drive);
      Json result = to_json(wp);
      result["theta_l"] = s.angles.theta_l;
      result["theta_h"] = s.angles.theta_h;
      result["theta_t"] = s.angles.theta_t;
      result["transitions"] = transitions_json(s);
      result["k31_over_k"] = s.kappa31 / s.kappa;
      result["k32_over_k"] = s.kappa32 / s.kappa;
      if (kind == GateKind::sqrt_swap_1 || kind == GateKind::sqrt_swap_2) {
        result["phase_h"] = sqrt_swap_phase(r.params, wp.drive, wp.carrier_l, wp.carrier_h);
      }
      os << Json{{"config", config_json("solve", r, {{"gate", to_string(kind)}})},
                 {"working_point", result}}.dump(2)
         << '\n';
    } else if (xi->parsed()) {
      const GateKind kind = parse_gate_kind(xi_gate);
      const WorkingPoint wp = point_for(r, kind, xi_nu_d, xi_omega);
      const DressedSpectrum s = dressed_spectrum(r.params, wp.drive);
      const double from = xi_from.value_or(wp.carrier_l - 10.0 * r.params.resonator_linewidth);
      const double to = xi_to.value_or(wp.carrier_h + 10.0 * r.params.resonator_linewidth);
      if (xi_points < 2 || !(to > from)) throw ConfigError("xi: need --points >= 2 and --to > --from");
      const Json config = config_json("xi", r, {{"gate", to_string(kind)},
                                                {"drive", to_json(wp.drive)},
                                                {"from", from}, {"to", to},
                                                {"points", xi_points}});
      const bool csv = format_of(common, "csv") == "csv";
      Json rows = Json::array();
      if (csv) {
        os << csv_config_header(config);
        os << "nu,re_xi11,im_xi11,re_xi12,im_xi12,re_xi21,im_xi21,re_xi22,im_xi22,norm1,norm2\n";
      }
      for (std::size_t i = 0; i < xi_points; ++i) {
        const double nu = from + (to - from) * static_cast<double>(i) / (xi_points - 1.0);
        const XiMatrix m = xi_matrix(s, nu);
        const double n1 = std::norm(m.xi11) + std::norm(m.xi12);
        const double n2 = std::norm(m.xi21) + std::norm(m.xi22);
        if (csv) {
          os << fmt(nu);
          for (Complex c : {m.xi11, m.xi12, m.xi21, m.xi22}) {
            os << ',' << fmt(c.real()) << ',' << fmt(c.imag());
          }
          os << ',' << fmt(n1) << ',' << fmt(n2) << '\n';
        } else {
          Json row = xi_json(m);
          row["norm1"] = n1;
          row["norm2"] = n2;
          rows.push_back(row);
        }
      }
      if (!csv) os << Json{{"config", config}, {"rows", rows}}.dump(2) << '\n';
    } else if (oracle->parsed()) {
      require_json(common, "oracle");
      const GateKind kind = parse_gate_kind(oracle_gate);
      if (oracle_carrier != "l" && oracle_carrier != "h") throw ConfigError("--carrier must be l or h");
      if (oracle_input != 1 && oracle_input != 2) throw ConfigError("--input must be 1 or 2");
      const WorkingPoint wp = point_for(r, kind, oracle_nu_d, oracle_omega);
      const double length = oracle_length.value_or(50.0 / r.params.resonator_linewidth);
      const double carrier = oracle_carrier == "l" ? wp.carrier_l : wp.carrier_h;
      TimeDomainOptions options;
      if (!oracle_trace.empty()) options.trace_stride = std::max<std::size_t>(1, oracle_stride);
      const Complex alpha = oracle_input == 1 ? 1.0 : 0.0;
      const Complex beta = oracle_input == 2 ? 1.0 : 0.0;
      const auto result =
          time_domain_oracle(r.params, wp.drive, PulseSpec::make(carrier, length), alpha, beta, options);
      const XiMatrix closed = xi_matrix(dressed_spectrum(r.params, wp.drive), carrier);
      const auto& x = result.extracted;
      const double diff = std::max({std::abs(x.xi11 - closed.xi11), std::abs(x.xi12 - closed.xi12),
                                    std::abs(x.xi21 - closed.xi21), std::abs(x.xi22 - closed.xi22)});
      if (!oracle_trace.empty()) {
        std::ofstream trace(oracle_trace);
        if (!trace) throw ConfigError("cannot write '" + oracle_trace + "'");
        write_trace_csv(trace, result);
      }
      const Json config = config_json("oracle", r, {{"gate", to_string(kind)},
                                                    {"drive", to_json(wp.drive)},
                                                    {"l_ns", length},
                                                    {"carrier", oracle_carrier},
                                                    {"input", oracle_input}});
      const int sector = oracle_input;
      os << Json{{"config", config},
                 {"carrier_ghz", carrier},
                 {"extracted", xi_json(x)},
                 {"closed_form", xi_json(closed)},
                 {"max_abs_difference", sector == 1 ? std::max(std::abs(x.xi11 - closed.xi11),
                                                               std::abs(x.xi12 - closed.xi12))
                                                    : std::max(std::abs(x.xi21 - closed.xi21),
                                                               std::abs(x.xi22 - closed.xi22))},
                 {"max_abs_difference_all", diff},
                 {"step_ns", result.step},
                 {"steps", result.steps},
                 {"input_norm", result.input_norm},
                 {"sector1_balance", result.sector1_balance},
                 {"sector2_balance", result.sector2_balance},
                 {"norm_drift", result.norm_drift}}.dump(2)
         << '\n';
    } else if (fidelity->parsed()) {
      require_json(common, "fidelity");
      std::vector<GateKind> kinds;
      if (fid_gate == "all") {
        kinds = {GateKind::identity, GateKind::swap, GateKind::sqrt_swap_1, GateKind::sqrt_swap_2};
      } else {
        kinds = {parse_gate_kind(fid_gate)};
      }
      QuadratureOptions q;
      q.points = fid_points;
      q.half_span = fid_span;
      q.check_convergence = !fid_no_check;
      Json reports = Json::array();
      for (GateKind kind : kinds) {
        const WorkingPoint wp = point_for(r, kind, fid_nu_d, fid_omega);
        Json report = to_json(gate_report(r.params, wp, fid_length, q));
        report["carriers"] = {wp.carrier_l, wp.carrier_h};
        report["degraded"] = wp.degraded;
        reports.push_back(report);
      }
      const Json config = config_json("fidelity", r, {{"gate", fid_gate},
                                                      {"l_ns", fid_length},
                                                      {"points", fid_points},
                                                      {"half_span_ghz", fid_span},
                                                      {"convergence_check", !fid_no_check}});
      os << Json{{"config", config}, {"reports", reports}}.dump(2) << '\n';
    } else if (sweep->parsed()) {
      const GateKind kind = parse_gate_kind(sweep_gate);
      kappa_axis.logarithmic = length_axis.logarithmic = !sweep_linear;
      SweepOptions options;
      options.delta_nu = r.delta_nu;
      options.threads = sweep_threads;
      options.quadrature.points = sweep_points;
      const Heatmap map = fidelity_sweep(r.params, kind, kappa_axis, length_axis, options);
      const Json config = config_json(
          "sweep", r,
          {{"gate", to_string(kind)},
           {"kappa", {{"min", kappa_axis.min}, {"max", kappa_axis.max}, {"n", kappa_axis.count}}},
           {"l", {{"min", length_axis.min}, {"max", length_axis.max}, {"n", length_axis.count}}},
           {"logarithmic", !sweep_linear},
           {"points", sweep_points}});
      if (format_of(common, "csv") == "csv") {
        os << csv_config_header(config);
        write_heatmap_csv(os, map);
      } else {
        Json cells = Json::array();
        for (const auto& c : map.cells) {
          cells.push_back({{"kappa_ghz", c.kappa}, {"l_ns", c.length},
                           {"fidelity", std::isnan(c.fidelity) ? Json() : Json(c.fidelity)},
                           {"leakage", std::isnan(c.leakage) ? Json() : Json(c.leakage)},
                           {"flag", c.flag}});
        }
        os << Json{{"config", config}, {"cells", cells}, {"argmax", map.argmax}}.dump(2) << '\n';
      }
    } else if (network->parsed()) {
      require_json(common, "network");
      NetworkSpec spec;
      NetworkState initial(0);
      std::string preset = net_preset.empty() ? "" : net_preset[0];
      const NetworkMode mode = parse_network_mode(net_mode);
      if (net_photon != "l" && net_photon != "h") throw ConfigError("--photon must be l or h");
      const int photon = net_photon == "h" ? 1 : 0;
      if (!net_spec.empty()) {
        if (!preset.empty()) throw ConfigError("give either a preset or --spec, not both");
        auto input = network_from_json(parse_json_file(net_spec), r.params, r.delta_nu);
        spec = input.spec;
        initial = input.state;
      } else if (preset == "domino") {
        if (net_preset.size() != 2) throw ConfigError("usage: network domino N");
        std::size_t n = 0;
        try {
          n = std::stoul(net_preset[1]);
        } catch (const std::exception&) {
          throw ConfigError("domino: N must be a positive integer");
        }
        spec = domino_spec(n, mode);
        for (std::size_t k : net_skip) {
          if (k < 1 || k > n) throw ConfigError("--skip: node " + std::to_string(k) + " outside 1..N");
          spec.nodes[k - 1].gate = GateKind::identity;
        }
        std::vector<int> atoms(n, 0);
        if (!net_in.empty()) {
          atoms = parse_labels(net_in);
          if (atoms.size() != n) throw ConfigError("--in needs one label per atom");
        }
        initial = NetworkState::basis(photon, atoms);
      } else if (preset == "aa-sqrt-swap") {
        if (net_preset.size() != 1) throw ConfigError("usage: network aa-sqrt-swap");
        const GateKind branch = parse_gate_kind(net_branch);
        spec = atom_atom_sqrt_swap_spec(branch, mode);
        std::vector<int> atoms(4, 0);
        if (!net_in.empty()) {
          const auto labels = parse_labels(net_in);
          if (labels.size() == 2) {
            atoms[0] = labels[0];
            atoms[2] = labels[1];
          } else if (labels.size() == 4) {
            atoms = labels;
          } else {
            throw ConfigError("--in takes atoms 1,3 or all four atoms");
          }
        }
        initial = NetworkState::basis(photon, atoms);
      } else if (preset.empty()) {
        throw ConfigError("network needs a preset (domino N, aa-sqrt-swap) or --spec");
      } else {
        throw ConfigError("unknown network preset '" + preset + "'");
      }
      if (net_spec.empty()) {
        spec.params = r.params;
        spec.delta_nu = r.delta_nu;
        spec.pulse_length = net_length;
        spec.link_amplitude = net_link;
      }
      const NetworkState final_state = run_network(spec, initial);
      Json nodes = Json::array();
      for (const auto& n : spec.nodes) nodes.push_back(working_point_label(n.gate));
      Json result{{"config", config_json("network", r, {{"preset", preset},
                                                        {"spec", net_spec},
                                                        {"mode", to_string(spec.mode)},
                                                        {"pulse_length_ns", spec.pulse_length},
                                                        {"link_amplitude", spec.link_amplitude}})},
                  {"nodes", nodes},
                  {"initial", to_json(initial)},
                  {"final", to_json(final_state)},
                  {"approximate", spec.mode == NetworkMode::pulsed}};
      if (preset == "aa-sqrt-swap") {
        result["concurrence_34"] = concurrence(reduced_density(final_state, 3, 4));
      }
      os << result.dump(2) << '\n';
    }
    sink.finish();
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace apgate::cli
