#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace apgate {

using Complex = std::complex<double>;
using GateMatrix = Eigen::Matrix4cd;

/// Two-qubit atom-photon basis: atom 0 = |1~>, 1 = |2~>; photon 0 = w_l,
/// 1 = w_h. Matrices act on the ordered basis
/// {|1~,w_l>, |1~,w_h>, |2~,w_l>, |2~,w_h>}.
constexpr int basis_index(int atom, int photon) { return 2 * atom + photon; }

enum class GateKind { swap, sqrt_swap_1, sqrt_swap_2, identity };

std::string_view to_string(GateKind kind);
/// Accepts "swap", "sqrt-swap-1", "sqrt-swap-2", "identity" and the working
/// point labels "P_sw", "P_rs1", "P_rs2", "P_id".
GateKind parse_gate_kind(std::string_view name);
std::string_view working_point_label(GateKind kind);

/// Target unitary for a gate kind. The sqrt-SWAP branches carry
/// (1 -/+ i)/2 on the diagonal of the entangling block, upper sign for
/// sqrt_swap_1.
GateMatrix ideal_gate(GateKind kind);

}  // namespace apgate
