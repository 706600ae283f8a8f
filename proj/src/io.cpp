#include "apgate/io.hpp"

#include <cmath>
#include <string>

#include "apgate/errors.hpp"

namespace apgate {

Json complex_to_json(Complex value) { return Json::array({value.real(), value.imag()}); }

Complex complex_from_json(const Json& value, const char* field) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
    return {value[0].get<double>(), value[1].get<double>()};
  }
  throw ConfigError(std::string(field) + ": expected a number or an [re, im] pair");
}

Json to_json(const SystemParams& params) {
  Json t1 = params.infinite_lifetime() ? Json("inf") : Json(params.atom_lifetime);
  return {{"nu_a_ghz", params.atom_freq},
          {"nu_r_ghz", params.resonator_freq},
          {"chi_ghz", params.dispersive_shift},
          {"kappa_ghz", params.resonator_linewidth},
          {"t1_ns", t1}};
}

namespace {

double number_field(const Json& value, const std::string& field) {
  if (!value.is_number()) throw ConfigError(field + ": expected a number");
  return value.get<double>();
}

double lifetime_field(const Json& value, const std::string& field) {
  if (value.is_null()) return kInfiniteLifetime;
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    if (s == "inf" || s == "infinity") return kInfiniteLifetime;
    throw ConfigError(field + ": expected a number or \"inf\"");
  }
  return number_field(value, field);
}

}  // namespace

SystemParams params_from_json(const Json& value, SystemParams base) {
  if (!value.is_object()) throw ConfigError("params: expected a JSON object");
  for (const auto& [key, v] : value.items()) {
    if (key == "nu_a_ghz") base.atom_freq = number_field(v, key);
    else if (key == "nu_r_ghz") base.resonator_freq = number_field(v, key);
    else if (key == "chi_ghz") base.dispersive_shift = number_field(v, key);
    else if (key == "kappa_ghz") base.resonator_linewidth = number_field(v, key);
    else if (key == "t1_ns") base.atom_lifetime = lifetime_field(v, key);
    else throw ConfigError("params: unknown key '" + key + "'");
  }
  base.validate();
  return base;
}

Json to_json(const DrivePoint& drive) {
  return {{"nu_d_ghz", drive.drive_freq}, {"omega_ghz", drive.drive_amp}};
}

Json to_json(const GateMatrix& matrix) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(matrix(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const WorkingPoint& point) {
  Json norms = Json::array();
  for (double n : point.predicted.column_norms) norms.push_back(n);
  return {{"gate", to_string(point.kind)},
          {"label", working_point_label(point.kind)},
          {"drive", to_json(point.drive)},
          {"carrier_l_ghz", point.carrier_l},
          {"carrier_h_ghz", point.carrier_h},
          {"delta_nu_ghz", point.delta_nu},
          {"monochromatic_gate", to_json(point.predicted.matrix)},
          {"column_norms", norms},
          {"leaks", point.predicted.leaks},
          {"degraded", point.degraded},
          {"degradation", point.degradation}};
}

Json to_json(const GateReport& report) {
  return {{"gate", to_string(report.kind)},
          {"drive", to_json(report.drive)},
          {"kappa_ghz", report.kappa},
          {"l_ns", report.length},
          {"t1_ns", std::isinf(report.lifetime) ? Json("inf") : Json(report.lifetime)},
          {"entanglement_fidelity", report.entanglement_fidelity},
          {"average_fidelity", report.average_fidelity},
          {"leakage", report.leakage},
          {"convergence_shift", report.convergence_shift},
          {"process_matrix", to_json(report.process)},
          {"ideal_overlaps", to_json(report.overlaps)}};
}

NetworkMode parse_network_mode(std::string_view name) {
  if (name == "ideal") return NetworkMode::ideal;
  if (name == "monochromatic") return NetworkMode::monochromatic;
  if (name == "pulsed") return NetworkMode::pulsed;
  throw ConfigError("mode: unknown network mode '" + std::string(name) +
                    "' (expected ideal, monochromatic, pulsed)");
}

std::string_view to_string(NetworkMode mode) {
  switch (mode) {
    case NetworkMode::ideal: return "ideal";
    case NetworkMode::monochromatic: return "monochromatic";
    case NetworkMode::pulsed: return "pulsed";
  }
  return "unknown";
}

namespace {

Qubit qubit_from_json(const Json& value, const std::string& field) {
  if (!value.is_array() || value.size() != 2) {
    throw ConfigError(field + ": expected a pair of amplitudes");
  }
  return {complex_from_json(value[0], (field + "[0]").c_str()),
          complex_from_json(value[1], (field + "[1]").c_str())};
}

}  // namespace

NetworkInput network_from_json(const Json& value, const SystemParams& params, double delta_nu) {
  if (!value.is_object()) throw ConfigError("network spec: expected a JSON object");
  NetworkInput input;
  input.spec.params = params;
  input.spec.delta_nu = delta_nu;

  const Json nodes = value.value("nodes", Json::array());
  if (!nodes.is_array()) throw ConfigError("nodes: expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string field = "nodes[" + std::to_string(i) + "]";
    const Json& n = nodes[i];
    if (!n.is_object() || !n.contains("gate") || !n["gate"].is_string()) {
      throw ConfigError(field + ".gate: expected a gate label string");
    }
    NodeSpec node;
    try {
      node.gate = parse_gate_kind(n["gate"].get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(field + ".gate: " + e.what());
    }
    if (n.contains("drive")) {
      const Json& d = n["drive"];
      if (!d.is_object()) throw ConfigError(field + ".drive: expected an object");
      node.drive = DrivePoint{number_field(d.value("nu_d_ghz", Json()), field + ".drive.nu_d_ghz"),
                              number_field(d.value("omega_ghz", Json()), field + ".drive.omega_ghz")};
    }
    input.spec.nodes.push_back(node);
  }
  if (value.contains("mode")) {
    if (!value["mode"].is_string()) throw ConfigError("mode: expected a string");
    input.spec.mode = parse_network_mode(value["mode"].get<std::string>());
  }
  if (value.contains("pulse_length_ns")) {
    input.spec.pulse_length = number_field(value["pulse_length_ns"], "pulse_length_ns");
  }
  if (value.contains("link_amplitude")) {
    input.spec.link_amplitude = number_field(value["link_amplitude"], "link_amplitude");
  }

  const Qubit photon = value.contains("photon") ? qubit_from_json(value["photon"], "photon")
                                                : Qubit{Complex(1.0), Complex(0.0)};
  std::vector<Qubit> atoms;
  if (value.contains("atoms")) {
    const Json& a = value["atoms"];
    if (!a.is_array()) throw ConfigError("atoms: expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
      atoms.push_back(qubit_from_json(a[i], "atoms[" + std::to_string(i) + "]"));
    }
  } else {
    atoms.assign(input.spec.nodes.size(), Qubit{Complex(1.0), Complex(0.0)});
  }
  if (atoms.size() != input.spec.nodes.size()) {
    throw DimensionMismatch("atoms: " + std::to_string(atoms.size()) + " entries for " +
                            std::to_string(input.spec.nodes.size()) + " nodes");
  }
  for (const auto& [key, v] : value.items()) {
    if (key != "nodes" && key != "mode" && key != "photon" && key != "atoms" &&
        key != "pulse_length_ns" && key != "link_amplitude") {
      throw ConfigError("network spec: unknown key '" + key + "'");
    }
  }
  input.state = NetworkState::product(photon, atoms);
  return input;
}

Json to_json(const NetworkState& state) {
  Json amps = Json::array();
  const auto a = state.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) == 0.0) continue;
    Json atoms = Json::array();
    for (std::size_t k = 1; k <= state.atom_count(); ++k) atoms.push_back((i >> k) & 1);
    amps.push_back({{"photon", i & 1}, {"atoms", atoms}, {"amplitude", complex_to_json(a[i])}});
  }
  return {{"atoms", state.atom_count()}, {"amplitudes", amps}, {"norm", state.norm()}};
}

}  // namespace apgate
