#pragma once

// Cascaded atom-resonator nodes addressed by one propagating photon.
//
// State layout: bit 0 of the amplitude index is the photon (0 = w_l,
// 1 = w_h), bit k is atom k (0 = |1~>, 1 = |2~>), k = 1..N.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "apgate/core_model.hpp"
#include "apgate/fidelity.hpp"
#include "apgate/gates.hpp"

namespace apgate {

inline constexpr std::size_t kMaxNetworkAtoms = 20;

enum class NetworkMode { ideal, monochromatic, pulsed };

struct NodeSpec {
  GateKind gate = GateKind::swap;
  std::optional<DrivePoint> drive;
};

struct NetworkSpec {
  std::vector<NodeSpec> nodes;
  NetworkMode mode = NetworkMode::ideal;
  SystemParams params;
  double delta_nu = 0.125;
  double pulse_length = 1738.0;  // ns, pulsed mode only
  /// Amplitude factor applied to the photon on every link between nodes.
  double link_amplitude = 1.0;
};

using Qubit = std::array<Complex, 2>;

class NetworkState {
 public:
  explicit NetworkState(std::size_t atoms);

  static NetworkState product(const Qubit& photon, std::span<const Qubit> atoms);
  /// Basis product state; atom and photon values are 0 or 1.
  static NetworkState basis(int photon, std::span<const int> atoms);

  std::size_t atom_count() const { return atoms_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex amplitude(int photon, std::span<const int> atoms) const;
  double norm() const;

 private:
  std::size_t atoms_;
  std::vector<Complex> amplitudes_;
};

/// Applies a 4x4 atom-photon map (basis_index order) to the photon and atom
/// k (1-based). Throws DimensionMismatch for a bad node index.
NetworkState apply_node(const NetworkState& state, std::size_t node, const GateMatrix& gate);

/// The node map under the network's mode: ideal unitary, monochromatic
/// scattering matrix, or pulsed process matrix (approximate: channels are
/// composed on the computational subspace only).
GateMatrix node_gate(const NetworkSpec& spec, std::size_t node);

NetworkState run_network(const NetworkSpec& spec, const NetworkState& initial);

/// All nodes must be P_sw or P_id.
NetworkState run_domino(const NetworkSpec& spec, const NetworkState& initial);

/// Nodes must read P_sw, P_id, P_rs1|P_rs2, P_sw; throws ConfigMismatch.
NetworkState run_atom_atom_sqrt_swap(const NetworkSpec& spec, const NetworkState& initial);
NetworkSpec atom_atom_sqrt_swap_spec(GateKind branch, NetworkMode mode = NetworkMode::ideal);
NetworkSpec domino_spec(std::size_t atoms, NetworkMode mode = NetworkMode::ideal);

/// Reduced density matrix of atoms a and b (1-based), basis |x_a x_b>.
Eigen::Matrix4cd reduced_density(const NetworkState& state, std::size_t a, std::size_t b);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const Eigen::Matrix4cd& rho);

}  // namespace apgate
