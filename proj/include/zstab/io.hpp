#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

#include "zstab/charge.hpp"
#include "zstab/grr.hpp"
#include "zstab/stability.hpp"
#include "zstab/surface.hpp"

namespace zstab::io {

using Json = nlohmann::json;

// Class grammar: terms joined by +/-, each a product of rational literals
// and generator powers, e.g. "1 + 3/2 h + 7/32 h^2", "2 h*l".
GradedClass parse_class(const RingPtr& ring, const std::string& text);

RingPtr parse_ring(const Json& j);
BundleData parse_bundle(const RingPtr& ring, const Json& j);
ChargeSpec parse_charge(const RingPtr& ring, const Json& j, bool weak_rho);
EmbeddedSubmanifold parse_submanifold(const RingPtr& ring, const Json& j);

struct ProblemSpec {
  RingPtr ring;
  std::map<std::string, BundleData> bundles;
  std::optional<ChargeSpec> charge;
  Json raw;

  const BundleData& bundle(const std::string& name) const;
};

ProblemSpec parse_problem(const Json& j, bool weak_rho);

Json charge_to_json(const ChargePolynomial& z);
Json verdict_to_json(const StabilityVerdict& v);
Json report_to_json(const AsymStabilityReport& r);
Json walls_to_json(const std::vector<WallScanResult>& walls);
Json surface_to_json(const SurfaceReport& r);

std::string rat_str(const Rat& r);
std::string gaussian_str(const Gaussian& z);

}  // namespace zstab::io
