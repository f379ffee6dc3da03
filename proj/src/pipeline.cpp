#include "strandkit/pipeline.hpp"

#include "strandkit/arrangement.hpp"
#include "strandkit/decomp.hpp"
#include "strandkit/error.hpp"
#include "strandkit/io.hpp"
#include "strandkit/localise.hpp"
#include "strandkit/planarise.hpp"
#include "strandkit/product_model.hpp"

#include <sstream>

namespace strandkit {

namespace {

using nlohmann::json;

// Stripped arrangement plus the colouring every later stage works with.
struct Prepared {
  StringScene scene;
  Arrangement arr;
  IntersectionGraph ig;
  std::vector<CurveId> isolated;
  OrderedColouring colouring;
  ColouringParams params;
};

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("permutation entries must be integers");
    }
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw InputError("permutation must list 1..t once each");
  }
  return out;
}

Prepared prepare(const StringScene& scene, const RunOptions& options) {
  Prepared p;
  const Arrangement full = compute_arrangement(scene);
  p.scene = strip_isolated(scene, full);
  for (CurveId c : full.curves) {
    if (full.events_on(c).empty()) p.isolated.push_back(c);
  }
  p.arr = compute_arrangement(p.scene);
  p.ig = intersection_graph(p.arr);
  if (options.colouring) {
    p.colouring.t = options.colouring->t;
    for (CurveId c : p.arr.curves) {
      auto it = options.colouring->phi.find(c);
      if (it == options.colouring->phi.end()) throw InputError("colouring misses curve " + std::to_string(c));
      p.colouring.phi[c] = it->second;
    }
  } else {
    p.colouring = default_colouring(p.ig);
  }
  if (auto it = options.params.find("permutation"); it != options.params.end()) {
    const auto perm = parse_permutation(it->second);
    if (static_cast<int>(perm.size()) != p.colouring.t) throw InputError("permutation length must equal t");
    p.colouring = relabel(p.colouring, perm);
  }
  p.params = compute_params(p.arr, p.colouring);
  return p;
}

json ids_json(const IntersectionGraph& ig) { return ig.ids; }

std::vector<std::pair<CurveId, CurveEnd>> grounded_ends(const StringScene& scene) {
  std::vector<std::pair<CurveId, CurveEnd>> y;
  for (const Curve& c : scene.curves) {
    if (c.grounded) y.emplace_back(c.id, c.grounded->end);
  }
  return y;
}

bool all_grounded(const StringScene& scene) {
  if (scene.curves.empty()) return false;
  for (const Curve& c : scene.curves) {
    if (!c.grounded) return false;
  }
  return true;
}

void exact_dominance(json& report, const TreeDecomposition& td, const Graph& g) {
  if (g.num_vertices() > 14) return;
  const int tw = exact_treewidth(g).width;
  report["exact_treewidth"] = tw;
  if (td.width() < tw) throw CheckFailure("decomposition width below the exact treewidth");
}

}  // namespace

Bundle run_arrange(const StringScene& scene) {
  const Arrangement arr = compute_arrangement(scene);
  const IntersectionGraph ig = intersection_graph(arr);
  Bundle b;
  b.report = {{"curves", arr.curves.size()},
              {"events", arr.events.size()},
              {"vertices", ig.graph.num_vertices()},
              {"edges", ig.graph.num_edges()},
              {"graph", graph_to_json(ig)}};
  b.files["events.json"] = dump_json(events_to_json(arr));
  b.files["graph.json"] = dump_json(graph_to_json(ig));
  b.files["graph.dot"] = graph_to_dot(ig);
  if (scene.mode == SceneMode::Geometric) b.files["scene.svg"] = scene_to_svg(scene, arr);
  return b;
}

Bundle run_planarise(const StringScene& scene, const RunOptions& options) {
  const Prepared s = prepare(scene, options);
  const Planarisation p = planarise(s.arr);
  check_planarisation(p);
  const ColouredPlanarisation cp = coloured_planarisation(p, s.colouring);
  check_sections_disjoint(cp);
  check_psi_partition(p, cp);
  check_unique_curve(p, cp);
  check_no_consecutive_level(cp);
  check_walk_intersections(cp, s.arr);
  json meetings = json::array();
  for (auto [a, c] : walk_meetings_without_crossing(cp, s.arr)) meetings.push_back({a, c});
  Bundle b;
  b.report = {{"isolated", s.isolated},
              {"colouring", colouring_to_json(s.colouring)},
              {"planarisation", {{"vertices", p.graph.num_vertices()}, {"edges", p.graph.num_edges()}, {"euler_genus", p.graph.euler_genus()}}},
              {"coloured_planarisation",
               {{"vertices", cp.graph.num_vertices()}, {"edges", cp.graph.num_edges()}, {"sections", cp.sections.size()}}},
              {"checks",
               {{"planarisation", true},
                {"sections_disjoint", true},
                {"psi_partition", true},
                {"unique_curve", true},
                {"no_consecutive_level", true},
                {"crossing_walks_meet", true}}},
              {"walk_meetings_without_crossing", meetings}};
  b.files["planarisation.json"] = dump_json(planarisation_to_json(p, &s.colouring));
  b.files["planarisation.dot"] = planarisation_to_dot(p, &s.colouring);
  b.files["coloured_planarisation.json"] = dump_json(coloured_planarisation_to_json(cp));
  b.files["coloured_planarisation.dot"] = coloured_planarisation_to_dot(cp);
  if (s.scene.mode == SceneMode::Geometric) b.files["sections.svg"] = scene_to_svg(s.scene, s.arr, s.colouring);
  return b;
}

Bundle run_colour(const StringScene& scene, const RunOptions& options) {
  const Prepared s = prepare(scene, options);
  std::vector<int> colour;
  for (CurveId c : s.ig.ids) colour.push_back(s.colouring(c));
  const TdegReport tdeg = verify_tdeg(s.ig.graph, colour, s.params.d);
  if (!tdeg.holds) throw CheckFailure("colouring is not (t, d)-degenerate for the computed d");
  Bundle b;
  b.report = {{"isolated", s.isolated},
              {"colouring", colouring_to_json(s.colouring)},
              {"params", params_to_json(s.params)},
              {"degeneracy", degeneracy(s.ig.graph)},
              {"tdeg_holds", tdeg.holds}};
  b.files["colouring.json"] = dump_json(colouring_to_json(s.colouring));
  return b;
}

Bundle run_model(const StringScene& scene, const RunOptions& options) {
  const Prepared s = prepare(scene, options);
  const Planarisation p = planarise(s.arr);
  const ColouredPlanarisation cp = coloured_planarisation(p, s.colouring);
  const ProductModel model = build_model(cp, s.ig, s.params.d);
  const ModelReport rep = verify_model(model.flatten(), s.ig.graph);
  if (!rep.valid) throw CheckFailure("model violates clause " + rep.violated_clause + ": " + rep.detail);
  check_projection(model, cp);
  const WalkDistances dist = walk_weak_diameter(cp, s.params.r);
  json diam = json::object();
  json rad = json::object();
  for (const auto& [c, v] : dist.diameter) diam[std::to_string(c)] = v;
  for (const auto& [c, v] : dist.radius) rad[std::to_string(c)] = v;
  Bundle b;
  b.report = {{"isolated", s.isolated},
              {"colouring", colouring_to_json(s.colouring)},
              {"params", params_to_json(s.params)},
              {"model", model_report_to_json(rep)},
              {"projection_matches_walks", true},
              {"distance_bound", bigint_to_json(s.params.r)},
              {"max_walk_diameter", dist.max_diameter},
              {"max_walk_diameter_host", dist.max_diameter_host},
              {"walk_diameter", diam},
              {"walk_radius", rad}};
  if (all_grounded(s.scene)) {
    const int g = grounded_distance_check(p, cp, grounded_ends(s.scene));
    b.report["grounded_distance"] = g;
    b.report["grounded_distance_bound"] = s.params.t - 1;
  }
  b.files["model.json"] = dump_json(model_to_json(model));
  return b;
}

Bundle run_decomp(const StringScene& scene, const RunOptions& options) {
  const Prepared s = prepare(scene, options);
  const ColouredPlanarisation cp = coloured_planarisation(planarise(s.arr), s.colouring);
  const ProductModel model = build_model(cp, s.ig, s.params.d);
  int r = 0;
  for (const auto& [c, rad] : walk_weak_diameter(cp, s.params.r).radius) r = std::max(r, rad);
  const LtwResult res = ltw_lift(cp, model, r);
  // isolated curves come back as singleton bags, numbered as in the full graph
  const IntersectionGraph full = intersection_graph(compute_arrangement(scene));
  std::vector<int> new_id;
  for (CurveId c : s.ig.ids) new_id.push_back(full.index_of(c));
  std::vector<int> singles;
  for (CurveId c : s.isolated) singles.push_back(full.index_of(c));
  const TreeDecomposition td = attach_singletons(restrict_td(res.td, new_id), singles);
  const TdReport check = verify_td(td, full.graph);
  if (!check.valid) throw CheckFailure("decomposition with isolated curves invalid: " + check.reason);
  Bundle b;
  b.report = {{"isolated", s.isolated},
              {"ids", ids_json(full)},
              {"params", params_to_json(s.params)},
              {"radius", r},
              {"width", td.width()},
              {"layers", res.layering.num_layers()},
              {"layered_width", res.layered_width},
              {"host_layered_width", res.host_layered_width},
              {"layered_width_bound", bigint_to_json(res.bound)},
              {"within_bound", true}};
  exact_dominance(b.report, td, full.graph);
  b.files["decomposition.td"] = td_to_pace(td, full.graph.num_vertices());
  b.files["decomposition.json"] = dump_json(td_to_json(td, full.graph.num_vertices()));
  json layers = json::object();
  for (std::size_t v = 0; v < s.ig.ids.size(); ++v) layers[std::to_string(s.ig.ids[v])] = res.layering.layer_of[v];
  b.files["layering.json"] = dump_json(layers);
  return b;
}

Bundle run_outerstring(const StringScene& scene, const RunOptions& options) {
  if (scene.disks.empty()) throw InputError("outerstring mode needs at least one disk");
  const GcOuterstringReport gc = gc_outerstring_report(scene, options.colouring);
  Bundle b;
  b.report = {{"c", gc.c},
              {"genus", gc.genus},
              {"orientable", gc.orientable},
              {"t", gc.t},
              {"d", gc.d},
              {"cover_radius", gc.cover_radius},
              {"layers", gc.layers},
              {"gc_bound", bigint_to_json(gc.bound)}};
  if (gc.constructed) {
    const OuterstringResult& res = *gc.constructed;
    b.report["ids"] = ids_json(res.graph);
    b.report["width"] = res.width;
    b.report["bound"] = bigint_to_json(res.bound);
    b.report["within_bound"] = BigInt(res.width) <= res.bound;
    b.report["eccentricity"] = res.eccentricity;
    b.report["host_width"] = res.host_width;
    b.report["colouring"] = colouring_to_json(res.colouring);
    exact_dominance(b.report, res.td, res.graph.graph);
    b.files["decomposition.td"] = td_to_pace(res.td, res.graph.graph.num_vertices());
    b.files["decomposition.json"] = dump_json(td_to_json(res.td, res.graph.graph.num_vertices()));
  }
  return b;
}

Bundle run_localise(const StringScene& scene, const RunOptions& options) {
  const Prepared s = prepare(scene, options);
  const AuxiliaryInstance inst = build_HR(s.arr, select_crossings(s.arr));
  const auto realised = check_weak_realisation(inst);
  if (!realised.valid) throw CheckFailure("selected drawing is not a weak realisation: " + realised.reason);
  const Arrangement trimmed = compute_arrangement(reassemble(inst));
  BigonReport bigons;
  const AuxiliaryInstance reduced = bigon_reduce(inst, options.seed, &bigons);
  const StringScene out = reassemble(reduced);
  const Arrangement final_arr = compute_arrangement(out);

  const IntersectionGraph before_g = intersection_graph(s.arr);
  const IntersectionGraph after_g = intersection_graph(final_arr);
  if (before_g.ids != after_g.ids || before_g.graph.edges() != after_g.graph.edges()) {
    throw CheckFailure("reassembled scene changes the intersection graph");
  }
  const Census original = crossing_census(s.arr);
  const Census after_trim = crossing_census(trimmed);
  const Census after = crossing_census(final_arr);
  for (const auto& [c, e] : after.curves) {
    if (e.count > original.curves.at(c).count) throw CheckFailure("localising increased the crossings on curve " + std::to_string(c));
  }
  Bundle b;
  b.report = {{"isolated", s.isolated},
              {"graph_preserved", true},
              {"bigons_removed", bigons.removed},
              {"census_before", census_to_json(original)},
              {"census_trimmed", census_to_json(after_trim)},
              {"census_after", census_to_json(after)},
              {"max_count_before", original.max_count},
              {"max_count_after", after.max_count},
              {"all_within_bound", after.all_within_bound}};
  b.files["instance.json"] = dump_json(instance_to_json(reduced));
  b.files["localised.json"] = dump_json(scene_to_json(out));
  return b;
}

}  // namespace strandkit
