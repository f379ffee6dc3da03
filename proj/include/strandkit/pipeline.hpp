#pragma once

#include "strandkit/colouring.hpp"
#include "strandkit/scene.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace strandkit {

struct RunOptions {
  std::optional<OrderedColouring> colouring;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;
};

/// A report plus the auxiliary files a run produces, keyed by file name.
/// The extension of each file name is its format (json, dot, svg, td).
struct Bundle {
  nlohmann::json report;
  std::map<std::string, std::string> files;
};

/// Each stage runs every checker that applies and throws CheckFailure on the
/// first violated certificate.
Bundle run_arrange(const StringScene& scene);
Bundle run_planarise(const StringScene& scene, const RunOptions& options);
Bundle run_colour(const StringScene& scene, const RunOptions& options);
Bundle run_model(const StringScene& scene, const RunOptions& options);
Bundle run_decomp(const StringScene& scene, const RunOptions& options);
Bundle run_outerstring(const StringScene& scene, const RunOptions& options);
Bundle run_localise(const StringScene& scene, const RunOptions& options);

}  // namespace strandkit
