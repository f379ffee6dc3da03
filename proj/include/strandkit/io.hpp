#pragma once

#include "strandkit/arrangement.hpp"
#include "strandkit/colouring.hpp"
#include "strandkit/decomp.hpp"
#include "strandkit/planarise.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace strandkit {

nlohmann::json graph_to_json(const IntersectionGraph& ig);
std::string graph_to_dot(const IntersectionGraph& ig);

/// Vertices carry kind and (with a colouring) level; edges carry the owning curve.
nlohmann::json planarisation_to_json(const Planarisation& p, const OrderedColouring* colouring = nullptr);
std::string planarisation_to_dot(const Planarisation& p, const OrderedColouring* colouring = nullptr);

/// Vertices carry kind, level and the curves whose walks visit them.
nlohmann::json coloured_planarisation_to_json(const ColouredPlanarisation& cp);
std::string coloured_planarisation_to_dot(const ColouredPlanarisation& cp);

/// Geometric scenes only. With a colouring, curves are stroked by colour
/// class and sections are overlaid as wide translucent bands.
std::string scene_to_svg(const StringScene& scene, const Arrangement& arrangement,
                         const std::optional<OrderedColouring>& colouring = std::nullopt);

/// Readers for the two decomposition formats written by the tools. The
/// declared vertex count is returned through `num_vertices`.
TreeDecomposition td_from_pace(const std::string& text, int* num_vertices = nullptr);
TreeDecomposition td_from_json(const nlohmann::json& j, int* num_vertices = nullptr);

/// Canonical text form used for every JSON file written by the tools.
std::string dump_json(const nlohmann::json& j);
void write_text(const std::string& path, const std::string& text);

}  // namespace strandkit
