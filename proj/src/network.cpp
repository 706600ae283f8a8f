#include "apgate/network.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

#include "apgate/drive_control.hpp"
#include "apgate/errors.hpp"

namespace apgate {

NetworkState::NetworkState(std::size_t atoms) : atoms_(atoms) {
  if (atoms > kMaxNetworkAtoms) {
    throw DimensionMismatch("network supports at most " + std::to_string(kMaxNetworkAtoms) +
                            " atoms, got " + std::to_string(atoms));
  }
  amplitudes_.assign(std::size_t{1} << (atoms + 1), Complex{});
}

NetworkState NetworkState::product(const Qubit& photon, std::span<const Qubit> atoms) {
  NetworkState state(atoms.size());
  for (std::size_t index = 0; index < state.dimension(); ++index) {
    Complex a = photon[index & 1];
    for (std::size_t k = 0; k < atoms.size(); ++k) a *= atoms[k][(index >> (k + 1)) & 1];
    state.amplitudes_[index] = a;
  }
  return state;
}

NetworkState NetworkState::basis(int photon, std::span<const int> atoms) {
  NetworkState state(atoms.size());
  state.amplitudes_[0] = 0.0;
  std::size_t index = 0;
  auto bit = [](int v, const char* what) {
    if (v != 0 && v != 1) throw ConfigError(std::string(what) + " basis value must be 0 or 1");
    return static_cast<std::size_t>(v);
  };
  index |= bit(photon, "photon");
  for (std::size_t k = 0; k < atoms.size(); ++k) index |= bit(atoms[k], "atom") << (k + 1);
  state.amplitudes_[index] = 1.0;
  return state;
}

Complex NetworkState::amplitude(int photon, std::span<const int> atoms) const {
  if (atoms.size() != atoms_) throw DimensionMismatch("atom count does not match the state");
  std::size_t index = static_cast<std::size_t>(photon & 1);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    index |= static_cast<std::size_t>(atoms[k] & 1) << (k + 1);
  }
  return amplitudes_[index];
}

double NetworkState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

NetworkState apply_node(const NetworkState& state, std::size_t node, const GateMatrix& gate) {
  if (node < 1 || node > state.atom_count()) {
    throw DimensionMismatch("node " + std::to_string(node) + " outside 1.." +
                            std::to_string(state.atom_count()));
  }
  NetworkState out = state;
  const auto in = state.amplitudes();
  auto dst = out.amplitudes();
  const std::size_t atom_bit = std::size_t{1} << node;
  for (std::size_t base = 0; base < in.size(); ++base) {
    if (base & (atom_bit | 1)) continue;
    const std::size_t idx[4] = {base, base | 1, base | atom_bit, base | atom_bit | 1};
    for (int row = 0; row < 4; ++row) {
      Complex sum{};
      for (int col = 0; col < 4; ++col) sum += gate(row, col) * in[idx[col]];
      dst[idx[row]] = sum;
    }
  }
  return out;
}

namespace {

WorkingPoint node_point(const NetworkSpec& spec, const NodeSpec& node) {
  if (node.drive) return working_point_at(spec.params, node.gate, spec.delta_nu, *node.drive);
  return solve_working_point(spec.params, {node.gate, spec.delta_nu});
}

void check_nodes(const NetworkSpec& spec, const NetworkState& state) {
  if (state.atom_count() != spec.nodes.size()) {
    throw DimensionMismatch("state has " + std::to_string(state.atom_count()) + " atoms but the "
                            "network has " + std::to_string(spec.nodes.size()) + " nodes");
  }
}

}  // namespace

GateMatrix node_gate(const NetworkSpec& spec, std::size_t node) {
  if (node < 1 || node > spec.nodes.size()) {
    throw DimensionMismatch("node " + std::to_string(node) + " outside the network");
  }
  const NodeSpec& n = spec.nodes[node - 1];
  switch (spec.mode) {
    case NetworkMode::ideal:
      return ideal_gate(n.gate);
    case NetworkMode::monochromatic:
      return node_point(spec, n).predicted.matrix;
    case NetworkMode::pulsed:
      return gate_report(spec.params, node_point(spec, n), spec.pulse_length).process;
  }
  return ideal_gate(n.gate);
}

NetworkState run_network(const NetworkSpec& spec, const NetworkState& initial) {
  check_nodes(spec, initial);
  NetworkState state = initial;
  for (std::size_t k = 1; k <= spec.nodes.size(); ++k) {
    if (k > 1 && spec.link_amplitude != 1.0) {
      for (auto& a : state.amplitudes()) a *= spec.link_amplitude;
    }
    state = apply_node(state, k, node_gate(spec, k));
  }
  return state;
}

NetworkState run_domino(const NetworkSpec& spec, const NetworkState& initial) {
  if (spec.mode == NetworkMode::pulsed) {
    throw ConfigMismatch("domino runs in ideal or monochromatic mode");
  }
  for (std::size_t k = 0; k < spec.nodes.size(); ++k) {
    const GateKind g = spec.nodes[k].gate;
    if (g != GateKind::swap && g != GateKind::identity) {
      throw ConfigMismatch("domino node " + std::to_string(k + 1) + " must be P_sw or P_id");
    }
  }
  return run_network(spec, initial);
}

NetworkState run_atom_atom_sqrt_swap(const NetworkSpec& spec, const NetworkState& initial) {
  const auto& n = spec.nodes;
  const bool pattern = n.size() == 4 && n[0].gate == GateKind::swap &&
                       n[1].gate == GateKind::identity &&
                       (n[2].gate == GateKind::sqrt_swap_1 || n[2].gate == GateKind::sqrt_swap_2) &&
                       n[3].gate == GateKind::swap;
  if (!pattern) throw ConfigMismatch("atom-atom sqrt-SWAP needs nodes P_sw, P_id, P_rs1|P_rs2, P_sw");
  return run_network(spec, initial);
}

NetworkSpec atom_atom_sqrt_swap_spec(GateKind branch, NetworkMode mode) {
  if (branch != GateKind::sqrt_swap_1 && branch != GateKind::sqrt_swap_2) {
    throw ConfigMismatch("branch must be P_rs1 or P_rs2");
  }
  NetworkSpec spec;
  spec.mode = mode;
  spec.nodes = {{GateKind::swap, {}}, {GateKind::identity, {}}, {branch, {}}, {GateKind::swap, {}}};
  return spec;
}

NetworkSpec domino_spec(std::size_t atoms, NetworkMode mode) {
  if (atoms > kMaxNetworkAtoms) throw DimensionMismatch("too many atoms for a domino");
  NetworkSpec spec;
  spec.mode = mode;
  spec.nodes.assign(atoms, NodeSpec{GateKind::swap, {}});
  return spec;
}

Eigen::Matrix4cd reduced_density(const NetworkState& state, std::size_t a, std::size_t b) {
  const std::size_t n = state.atom_count();
  if (a < 1 || b < 1 || a > n || b > n || a == b) {
    throw DimensionMismatch("reduced_density needs two distinct atoms in 1.." + std::to_string(n));
  }
  const std::size_t bit_a = std::size_t{1} << a, bit_b = std::size_t{1} << b;
  const auto amps = state.amplitudes();
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (std::size_t rest = 0; rest < amps.size(); ++rest) {
    if (rest & (bit_a | bit_b)) continue;
    Complex v[4];
    for (int x = 0; x < 4; ++x) {
      v[x] = amps[rest | ((x >> 1) ? bit_a : 0) | ((x & 1) ? bit_b : 0)];
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) rho(i, j) += v[i] * std::conj(v[j]);
    }
  }
  return rho;
}

double concurrence(const Eigen::Matrix4cd& rho_in) {
  const Complex trace = rho_in.trace();
  if (std::abs(trace) <= 0.0) throw ConfigError("density matrix has zero trace");
  const Eigen::Matrix4cd rho = rho_in / trace;
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  const Eigen::Matrix4cd tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(rho * tilde, false);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(0.0, solver.eigenvalues()[i].real()));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace apgate
