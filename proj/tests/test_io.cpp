#include <catch_amalgamated.hpp>

#include "apgate/errors.hpp"
#include "apgate/io.hpp"

using namespace apgate;
using Catch::Approx;

TEST_CASE("parameters round-trip through JSON and overlay a base") {
  SystemParams p;
  p.resonator_linewidth = 0.007;
  p.atom_lifetime = kInfiniteLifetime;
  const Json j = to_json(p);
  CHECK(j["t1_ns"] == "inf");
  const auto back = params_from_json(j);
  CHECK(back.resonator_linewidth == 0.007);
  CHECK(back.infinite_lifetime());

  const auto partial = params_from_json(Json{{"chi_ghz", 0.06}});
  CHECK(partial.dispersive_shift == 0.06);
  CHECK(partial.atom_freq == 5.0);
  CHECK(params_from_json(Json{{"t1_ns", nullptr}}).infinite_lifetime());
}

TEST_CASE("malformed parameter JSON names the field") {
  try {
    params_from_json(Json{{"kappa_ghz", "fast"}});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("kappa_ghz") != std::string::npos);
  }
  CHECK_THROWS_AS(params_from_json(Json{{"colour", 1}}), ConfigError);
  CHECK_THROWS_AS(params_from_json(Json{{"kappa_ghz", -1.0}}), ConfigError);
  CHECK_THROWS_AS(params_from_json(Json::array()), ConfigError);
}

TEST_CASE("complex numbers are [re, im] pairs") {
  CHECK(complex_to_json({1.5, -2.0}) == Json::array({1.5, -2.0}));
  CHECK(complex_from_json(Json::array({0.5, 0.25}), "x") == Complex(0.5, 0.25));
  CHECK(complex_from_json(Json(2.0), "x") == Complex(2.0, 0.0));
  CHECK_THROWS_AS(complex_from_json(Json::array({1.0}), "x"), ConfigError);
}

TEST_CASE("network specs parse nodes, mode and initial state") {
  const Json spec = Json::parse(R"({
    "nodes": [{"gate": "P_sw"}, {"gate": "P_id"}],
    "mode": "ideal",
    "photon": [[0, 0], [1, 0]],
    "atoms": [[1, 0], [[0.6, 0], [0, 0.8]]]
  })");
  const auto in = network_from_json(spec, SystemParams{}, 0.125);
  REQUIRE(in.spec.nodes.size() == 2);
  CHECK(in.spec.nodes[0].gate == GateKind::swap);
  CHECK(in.spec.nodes[1].gate == GateKind::identity);
  CHECK(in.state.norm() == Approx(1.0));
  const std::vector<int> atoms{0, 1};
  CHECK(in.state.amplitude(1, atoms) == Complex(0.0, 0.8));
}

TEST_CASE("network spec errors carry the field path") {
  auto message = [](const char* text) {
    try {
      network_from_json(Json::parse(text), SystemParams{}, 0.125);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"nodes": [{"gate": "P_sw"}, {"gate": "P_xx"}]})").find("nodes[1].gate") !=
        std::string::npos);
  CHECK(message(R"({"nodes": [{"gate": "P_sw"}], "atoms": [[1]]})").find("atoms[0]") !=
        std::string::npos);
  CHECK(message(R"({"nodes": [], "mode": "quantum"})").find("mode") != std::string::npos);
  CHECK(message(R"({"nodes": [{"gate": "P_sw"}], "atoms": []})").find("atoms") != std::string::npos);
  CHECK(message(R"({"nodez": []})").find("nodez") != std::string::npos);
}

TEST_CASE("report and state serialization") {
  NetworkState s(1);
  s.amplitudes()[2] = 1.0;
  const Json j = to_json(s);
  CHECK(j["norm"] == 1.0);
  CHECK(j["amplitudes"].size() == 1);
  CHECK(j["amplitudes"][0]["atoms"][0] == 1);
  CHECK(to_json(GateMatrix::Identity()).size() == 4);
  CHECK(parse_network_mode("pulsed") == NetworkMode::pulsed);
  CHECK(to_string(NetworkMode::monochromatic) == "monochromatic");
}
