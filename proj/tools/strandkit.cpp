#include "strandkit/arrangement.hpp"
#include "strandkit/bounds.hpp"
#include "strandkit/colouring.hpp"
#include "strandkit/decomp.hpp"
#include "strandkit/error.hpp"
#include "strandkit/families.hpp"
#include "strandkit/io.hpp"
#include "strandkit/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace strandkit;
using nlohmann::json;

namespace {

struct Config {
  std::string command;
  std::string in;
  std::string out;
  std::string colouring;
  std::uint64_t seed = 0;
  std::vector<std::string> formats;
  std::string theorem;
  std::vector<std::string> params;
};

const std::map<std::string, std::string> kModule = {
    {"arrange", "repr"},     {"planarise", "planarise"}, {"colour", "colouring"}, {"model", "product_model"},
    {"decomp", "decomp"},    {"outerstring", "decomp"},  {"localise", "localise"}, {"gen", "families"},
    {"bounds", "decomp"},    {"verify", "decomp"}};

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--params expects key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int int_param(const std::map<std::string, std::string>& params, const std::string& key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("parameter " + key + " must be an integer");
  }
}

StringScene need_scene(const Config& cfg) {
  if (cfg.in.empty()) throw InputError("--in is required");
  return load_scene(cfg.in);
}

RunOptions run_options(const Config& cfg) {
  RunOptions o;
  o.seed = cfg.seed;
  o.params = parse_params(cfg.params);
  if (!cfg.colouring.empty()) o.colouring = colouring_from_json(read_json(cfg.colouring));
  return o;
}

json convex_to_json(const ConvexScene& s) {
  json sets = json::array();
  for (const auto& poly : s.sets) {
    json pts = json::array();
    for (const Point& p : poly) pts.push_back(point_to_json(p));
    sets.push_back(pts);
  }
  return {{"sets", sets}};
}

json drawing_report(const ConvexDrawing& d) {
  return {{"vertices", d.graph.num_vertices()},
          {"edges", d.edges.size()},
          {"max_degree", d.max_degree},
          {"max_crossings", d.max_crossings},
          {"crossing_bound", 2 * d.max_degree * d.max_degree},
          {"within_bound", d.max_crossings <= 2 * d.max_degree * d.max_degree}};
}

Bundle cmd_gen(const Config& cfg) {
  const auto params = parse_params(cfg.params);
  auto it = params.find("family");
  const std::string family = it == params.end() ? "random" : it->second;
  Bundle b;
  b.report["family"] = family;
  if (family == "random" || family == "grounded" || family == "segment") {
    StringScene s;
    if (family == "random") s = gen_random(int_param(params, "n", 6), int_param(params, "cap", 2), cfg.seed);
    else if (family == "grounded") s = gen_random_grounded(int_param(params, "n", 6), int_param(params, "disks", 1), cfg.seed);
    else s = gen_segment_family(int_param(params, "t", 2));
    const auto ig = intersection_graph(compute_arrangement(s));
    b.report["curves"] = s.curves.size();
    b.report["edges"] = ig.graph.num_edges();
    if (family == "segment") {
      const int t = int_param(params, "t", 2);
      const auto m = ktt_minor_model(ig.graph, t);
      const auto rep = verify_model(m, complete_bipartite(t, t));
      b.report["vertices"] = ig.graph.num_vertices();
      b.report["degeneracy"] = degeneracy(ig.graph);
      b.report["radius"] = radius(ig.graph);
      b.report["k22_free"] = is_k22_free(ig.graph);
      b.report["ktt_model"] = model_report_to_json(rep);
      if (!rep.valid || !is_k22_free(ig.graph) || degeneracy(ig.graph) > 2 || radius(ig.graph) > 3) {
        throw CheckFailure("segment family certificate failed");
      }
    }
    b.files["scene.json"] = dump_json(scene_to_json(s));
  } else if (family == "rectangles" || family == "convex") {
    const ConvexScene s = family == "rectangles" ? gen_rectangles(int_param(params, "delta", 2))
                                                 : gen_random_convex(int_param(params, "n", 8), cfg.seed);
    b.report["drawing"] = drawing_report(convex_to_drawing(s));
    b.files["convex.json"] = dump_json(convex_to_json(s));
  } else if (family == "grid_disk") {
    const GridDisk f = gen_grid_disk(int_param(params, "t", 3));
    const Graph g = convex_intersection_graph(f.polygons);
    if (g.edges() != circle_intersection_graph(f).edges()) throw CheckFailure("polygon and circle graphs differ");
    b.report["vertices"] = g.num_vertices();
    b.report["degeneracy"] = degeneracy(g);
    b.report["radius"] = radius(g);
    b.report["drawing"] = drawing_report(convex_to_drawing(f.polygons));
    b.files["convex.json"] = dump_json(convex_to_json(f.polygons));
  } else {
    throw InputError("unknown family '" + family + "' (random, grounded, segment, rectangles, convex, grid_disk)");
  }
  return b;
}

Bundle cmd_bounds(const Config& cfg) {
  Bundle b;
  if (cfg.theorem.empty()) {
    json list = json::array();
    for (const auto& f : bound_catalogue()) list.push_back({{"id", f.id}, {"params", f.params}, {"formula", f.formula}});
    b.report["catalogue"] = list;
    return b;
  }
  std::map<std::string, BigInt> values;
  for (const auto& [k, v] : parse_params(cfg.params)) {
    try {
      values[k] = BigInt(v);
    } catch (const std::exception&) {
      throw InputError("parameter " + k + " must be an integer");
    }
  }
  b.report["theorem"] = cfg.theorem;
  json pj = json::object();
  for (const auto& [k, v] : values) pj[k] = bigint_to_json(v);
  b.report["params"] = pj;
  b.report["value"] = bigint_to_json(evaluate_bound(cfg.theorem, values));
  return b;
}

// Checks a decomposition (--params td=FILE) and/or a colouring against a scene.
Bundle cmd_verify(const Config& cfg) {
  const StringScene scene = need_scene(cfg);
  const auto params = parse_params(cfg.params);
  const Arrangement arr = compute_arrangement(scene);
  const IntersectionGraph ig = intersection_graph(arr);
  Bundle b;
  bool ok = true;
  auto td_path = params.find("td");
  if (td_path == params.end() && cfg.colouring.empty()) throw InputError("verify needs --params td=FILE or --colouring");
  if (td_path != params.end()) {
    int n = 0;
    const std::string& path = td_path->second;
    const TreeDecomposition td = path.ends_with(".json") ? td_from_json(read_json(path), &n) : td_from_pace(read_file(path), &n);
    if (n != ig.graph.num_vertices()) throw InputError("decomposition has " + std::to_string(n) + " vertices, graph has " +
                                                       std::to_string(ig.graph.num_vertices()));
    const TdReport rep = verify_td(td, ig.graph);
    b.report["td"] = {{"valid", rep.valid}, {"width", rep.width}, {"reason", rep.reason}};
    ok = ok && rep.valid;
  }
  if (!cfg.colouring.empty()) {
    const OrderedColouring col = colouring_from_json(read_json(cfg.colouring));
    validate_colouring(arr, col);
    const ColouringParams p = compute_params(arr, col);
    b.report["colouring"] = {{"proper", true}, {"params", params_to_json(p)}};
    if (params.contains("d")) {
      std::vector<int> colour;
      for (CurveId c : ig.ids) colour.push_back(col(c));
      const bool holds = verify_tdeg(ig.graph, colour, int_param(params, "d", 0)).holds;
      b.report["colouring"]["tdeg_holds"] = holds;
      ok = ok && holds;
    }
  }
  b.report["ok"] = ok;
  if (!ok) throw CheckFailure("verification failed");
  return b;
}

Bundle dispatch(const Config& cfg) {
  const std::string& c = cfg.command;
  if (c == "gen") return cmd_gen(cfg);
  if (c == "bounds") return cmd_bounds(cfg);
  if (c == "verify") return cmd_verify(cfg);
  const StringScene scene = need_scene(cfg);
  if (c == "arrange") return run_arrange(scene);
  const RunOptions o = run_options(cfg);
  if (c == "planarise") return run_planarise(scene, o);
  if (c == "colour") return run_colour(scene, o);
  if (c == "model") return run_model(scene, o);
  if (c == "decomp") return run_decomp(scene, o);
  if (c == "outerstring") return run_outerstring(scene, o);
  return run_localise(scene, o);
}

json header(const Config& cfg) {
  json params = json::object();
  for (const auto& item : cfg.params) {
    const auto eq = item.find('=');
    if (eq != std::string::npos) params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  json h{{"tool", "strandkit"}, {"command", cfg.command}, {"seed", cfg.seed}, {"params", params}};
  if (!cfg.in.empty()) h["input"] = cfg.in;
  if (!cfg.colouring.empty()) h["colouring"] = cfg.colouring;
  if (!cfg.theorem.empty()) h["theorem"] = cfg.theorem;
  return h;
}

bool wanted(const Config& cfg, const std::string& name) {
  if (cfg.formats.empty()) return true;
  const std::string ext = name.substr(name.rfind('.') + 1);
  return std::find(cfg.formats.begin(), cfg.formats.end(), ext) != cfg.formats.end();
}

void emit(const Config& cfg, const json& report, const std::map<std::string, std::string>& files) {
  const std::string text = dump_json(report);
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(cfg.out);
  write_text((std::filesystem::path(cfg.out) / "report.json").string(), text);
  for (const auto& [name, content] : files) {
    if (wanted(cfg, name)) write_text((std::filesystem::path(cfg.out) / name).string(), content);
  }
  std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strandkit: string representations, planarisations and tree decompositions"};
  app.require_subcommand(1);
  Config cfg;
  for (const auto& [name, module] : kModule) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--in", cfg.in, "input scene (JSON)");
    sub->add_option("--out", cfg.out, "output directory; report goes to stdout only if absent");
    sub->add_option("--colouring", cfg.colouring, "ordered colouring JSON {curve id: colour}");
    sub->add_option("--seed", cfg.seed, "seed for every random choice")->default_val(0);
    sub->add_option("--format", cfg.formats, "formats of auxiliary files to write")
        ->delimiter(',')
        ->check(CLI::IsMember({"json", "dot", "svg", "td"}));
    sub->add_option("--theorem", cfg.theorem, "bound id (bounds)");
    sub->add_option("--params", cfg.params, "key=value pairs")->delimiter(',')->allow_extra_args();
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  json report{{"header", header(cfg)}};
  const std::string prefix = kModule.at(cfg.command) + ": ";
  try {
    Bundle b = dispatch(cfg);
    report["status"] = "ok";
    report["result"] = std::move(b.report);
    emit(cfg, report, b.files);
    return 0;
  } catch (const CheckFailure& e) {
    report["status"] = "check_failure";
    report["error"] = prefix + e.what();
    std::cerr << prefix << e.what() << "\n";
    try {
      emit(cfg, report, {});
    } catch (const std::exception&) {
    }
    return 1;
  } catch (const InputError& e) {
    std::cerr << prefix << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << prefix << "invalid input: " << e.what() << "\n";
    return 2;
  }
}
