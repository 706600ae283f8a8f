#pragma once

#include <json.hpp>

#include "apgate/core_model.hpp"
#include "apgate/drive_control.hpp"
#include "apgate/fidelity.hpp"
#include "apgate/network.hpp"

namespace apgate {

using Json = nlohmann::json;

/// Complex numbers are [re, im] pairs.
Json complex_to_json(Complex value);
Complex complex_from_json(const Json& value, const char* field);

Json to_json(const SystemParams& params);
/// Overlays the fields present in `value` onto `base`; unknown keys and
/// malformed values raise ConfigError naming the field.
SystemParams params_from_json(const Json& value, SystemParams base = {});

Json to_json(const DrivePoint& drive);
Json to_json(const GateMatrix& matrix);
Json to_json(const WorkingPoint& point);
Json to_json(const GateReport& report);

NetworkMode parse_network_mode(std::string_view name);
std::string_view to_string(NetworkMode mode);

/// {nodes: [{gate: "P_sw"}...], mode: "ideal", photon: [c_l, c_h],
///  atoms: [[c1, c2], ...]}. Errors name the offending field path.
struct NetworkInput {
  NetworkSpec spec;
  NetworkState state{0};
};
NetworkInput network_from_json(const Json& value, const SystemParams& params, double delta_nu);
Json to_json(const NetworkState& state);

}  // namespace apgate
