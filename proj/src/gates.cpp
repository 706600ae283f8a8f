#include "apgate/gates.hpp"

#include <string>

#include "apgate/errors.hpp"

namespace apgate {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::swap: return "swap";
    case GateKind::sqrt_swap_1: return "sqrt-swap-1";
    case GateKind::sqrt_swap_2: return "sqrt-swap-2";
    case GateKind::identity: return "identity";
  }
  return "unknown";
}

std::string_view working_point_label(GateKind kind) {
  switch (kind) {
    case GateKind::swap: return "P_sw";
    case GateKind::sqrt_swap_1: return "P_rs1";
    case GateKind::sqrt_swap_2: return "P_rs2";
    case GateKind::identity: return "P_id";
  }
  return "unknown";
}

GateKind parse_gate_kind(std::string_view name) {
  for (auto kind : {GateKind::swap, GateKind::sqrt_swap_1, GateKind::sqrt_swap_2,
                    GateKind::identity}) {
    if (name == to_string(kind) || name == working_point_label(kind)) return kind;
  }
  if (name == "id") return GateKind::identity;
  if (name == "sw") return GateKind::swap;
  if (name == "rs1") return GateKind::sqrt_swap_1;
  if (name == "rs2") return GateKind::sqrt_swap_2;
  throw ConfigError("unknown gate '" + std::string(name) +
                    "' (expected swap, sqrt-swap-1, sqrt-swap-2, identity)");
}

GateMatrix ideal_gate(GateKind kind) {
  GateMatrix u = GateMatrix::Identity();
  const int one_h = basis_index(0, 1);
  const int two_l = basis_index(1, 0);
  switch (kind) {
    case GateKind::identity:
      break;
    case GateKind::swap:
      u(one_h, one_h) = u(two_l, two_l) = 0.0;
      u(two_l, one_h) = u(one_h, two_l) = 1.0;
      break;
    case GateKind::sqrt_swap_1:
    case GateKind::sqrt_swap_2: {
      const double sign = kind == GateKind::sqrt_swap_1 ? 1.0 : -1.0;
      const Complex stay(0.5, -0.5 * sign);
      const Complex cross(0.5, 0.5 * sign);
      u(one_h, one_h) = u(two_l, two_l) = stay;
      u(two_l, one_h) = u(one_h, two_l) = cross;
      break;
    }
  }
  return u;
}

}  // namespace apgate
