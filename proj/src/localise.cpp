#include "strandkit/localise.hpp"

#include "strandkit/bounds.hpp"
#include "strandkit/error.hpp"
#include "strandkit/planarise.hpp"

#include <algorithm>
#include <random>

namespace strandkit {

namespace {

std::map<std::string, int> positions(const std::vector<std::string>& labels) {
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);
  return pos;
}

int total_crossings(const AuxiliaryInstance& inst) {
  std::size_t n = 0;
  for (const auto& [c, labels] : inst.along) n += labels.size();
  return static_cast<int>(n / 2);
}

}  // namespace

int AuxiliaryInstance::vertex_index(CurveId a, CurveId b) const {
  const auto key = std::minmax(a, b);
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), std::pair<CurveId, CurveId>(key.first, key.second));
  if (it == vertices.end() || *it != std::pair<CurveId, CurveId>(key.first, key.second)) {
    throw InputError("curves " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  return static_cast<int>(it - vertices.begin());
}

int AuxiliaryInstance::edge_at(CurveId curve, int pos) const {
  const auto& labels = along.at(curve);
  int before = 0;
  for (int i = 0; i < pos; ++i) before += vertex_of.contains(labels[static_cast<std::size_t>(i)]) ? 1 : 0;
  if (before == 0 || before >= static_cast<int>(sigma.at(curve).size())) {
    throw CheckFailure("crossing outside the H-path of curve " + std::to_string(curve));
  }
  return first_edge.at(curve) + before - 1;
}

std::vector<int> AuxiliaryInstance::r_degrees() const {
  std::vector<int> deg(edges.size(), 0);
  for (auto [e, f] : R) {
    ++deg[static_cast<std::size_t>(e)];
    ++deg[static_cast<std::size_t>(f)];
  }
  return deg;
}

CrossingSelection select_crossings(const Arrangement& arrangement) {
  CrossingSelection sel;
  for (CurveId c : arrangement.curves) {
    for (int e : arrangement.events_on(c)) {
      const auto& ev = arrangement.events[static_cast<std::size_t>(e)];
      if (ev.curve_a != c) continue;  // walk along the lower-id curve
      sel.event.try_emplace({ev.curve_a, ev.curve_b}, e);
    }
  }
  return sel;
}

AuxiliaryInstance build_HR(const Arrangement& arrangement, const CrossingSelection& selection) {
  for (CurveId c : arrangement.curves) {
    if (arrangement.events_on(c).empty()) throw InputError("isolated curve " + std::to_string(c) + "; strip first");
  }
  if (planarise(arrangement).graph.euler_genus() != 0) throw InputError("localise needs a plane drawing");

  AuxiliaryInstance inst;
  for (const auto& [pair, e] : selection.event) {
    const auto& ev = arrangement.events[static_cast<std::size_t>(e)];
    if (std::pair(ev.curve_a, ev.curve_b) != pair) throw InputError("selected event does not lie on its edge");
    inst.vertices.push_back(pair);
  }
  std::set<int> selected;
  for (const auto& [pair, e] : selection.event) {
    selected.insert(e);
    inst.vertex_of[arrangement.events[static_cast<std::size_t>(e)].label] = inst.vertex_index(pair.first, pair.second);
  }

  // trim each curve to the span of its selected crossings
  std::map<CurveId, std::set<int>> kept;
  for (CurveId c : arrangement.curves) {
    const auto& on = arrangement.events_on(c);
    int first = -1;
    int last = -1;
    for (int i = 0; i < static_cast<int>(on.size()); ++i) {
      if (selected.contains(on[static_cast<std::size_t>(i)])) {
        if (first < 0) first = i;
        last = i;
      }
    }
    for (int i = first; i <= last; ++i) kept[c].insert(on[static_cast<std::size_t>(i)]);
  }
  for (CurveId c : arrangement.curves) {
    auto& labels = inst.along[c];
    auto& order = inst.sigma[c];
    for (int e : arrangement.events_on(c)) {
      const auto& ev = arrangement.events[static_cast<std::size_t>(e)];
      if (!kept[ev.curve_a].contains(e) || !kept[ev.curve_b].contains(e)) continue;
      labels.push_back(ev.label);
      inst.curves_of[ev.label] = {ev.curve_a, ev.curve_b};
      inst.chirality[ev.label] = ev.chirality;
      if (selected.contains(e)) order.push_back(ev.other(c));
    }
  }
  for (CurveId c : arrangement.curves) {
    inst.first_edge[c] = static_cast<int>(inst.edges.size());
    const auto& order = inst.sigma[c];
    for (int i = 0; i + 1 < static_cast<int>(order.size()); ++i) {
      inst.edges.push_back({c, i, inst.vertex_index(c, order[static_cast<std::size_t>(i)]),
                            inst.vertex_index(c, order[static_cast<std::size_t>(i) + 1])});
    }
  }
  for (CurveId c : arrangement.curves) {
    const auto& labels = inst.along[c];
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      const auto& label = labels[static_cast<std::size_t>(i)];
      const auto [a, b] = inst.curves_of.at(label);
      if (a != c || inst.vertex_of.contains(label)) continue;
      const int e = inst.edge_at(a, i);
      const int f = inst.edge_at(b, positions(inst.along.at(b)).at(label));
      inst.R.insert(std::minmax(e, f));
    }
  }
  return inst;
}

StringScene reassemble(const AuxiliaryInstance& instance) {
  StringScene s;
  s.mode = SceneMode::Abstract;
  for (const auto& [c, labels] : instance.along) {
    Curve curve;
    curve.id = c;
    curve.crossings = labels;
    s.curves.push_back(std::move(curve));
  }
  for (const auto& [label, chi] : instance.chirality) {
    bool present = false;
    for (const auto& [c, labels] : instance.along) present = present || std::find(labels.begin(), labels.end(), label) != labels.end();
    if (present && chi != 1) s.chirality[label] = chi;
  }
  validate_scene(s);
  return s;
}

WeakRealisationReport check_weak_realisation(const AuxiliaryInstance& instance) {
  WeakRealisationReport rep;
  auto fail = [&](std::string why) {
    rep.valid = false;
    rep.reason = std::move(why);
    return rep;
  };
  std::map<std::string, std::vector<CurveId>> seen;
  for (const auto& [c, labels] : instance.along) {
    for (const auto& l : labels) seen[l].push_back(c);
    std::vector<CurveId> order;
    for (const auto& l : labels) {
      if (instance.vertex_of.contains(l)) {
        const auto [a, b] = instance.curves_of.at(l);
        order.push_back(a == c ? b : a);
      }
    }
    if (order != instance.sigma.at(c)) return fail("H-vertices of curve " + std::to_string(c) + " out of sigma order");
    if (!labels.empty() && (!instance.vertex_of.contains(labels.front()) || !instance.vertex_of.contains(labels.back()))) {
      return fail("curve " + std::to_string(c) + " extends past its H-path");
    }
  }
  for (const auto& [label, on] : seen) {
    const auto [a, b] = instance.curves_of.at(label);
    if (on.size() != 2 || std::minmax(on[0], on[1]) != std::pair<const CurveId&, const CurveId&>(a, b)) {
      return fail("crossing " + label + " is not on its two curves");
    }
    if (instance.vertex_of.contains(label)) continue;
    const int e = instance.edge_at(a, positions(instance.along.at(a)).at(label));
    const int f = instance.edge_at(b, positions(instance.along.at(b)).at(label));
    if (!instance.R.contains(std::minmax(e, f))) {
      return fail("H-edges " + std::to_string(e) + " and " + std::to_string(f) + " cross but are not in R");
    }
  }
  const StringScene s = reassemble(instance);
  if (planarise(compute_arrangement(s)).graph.euler_genus() != 0) return fail("drawing is not plane");
  return rep;
}

AuxiliaryInstance bigon_reduce(const AuxiliaryInstance& instance, std::optional<std::uint64_t> seed, BigonReport* report) {
  AuxiliaryInstance out = instance;
  BigonReport rep;
  rep.crossings_before = total_crossings(out);
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  for (;;) {
    std::vector<std::pair<std::string, std::string>> candidates;
    for (const auto& [c, labels] : out.along) {
      for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
        const auto& p = labels[i];
        const auto& q = labels[i + 1];
        if (out.vertex_of.contains(p) || out.vertex_of.contains(q)) continue;
        const auto pair = out.curves_of.at(p);
        if (pair != out.curves_of.at(q) || pair.first != c) continue;
        const auto pos = positions(out.along.at(pair.second));
        if (std::abs(pos.at(p) - pos.at(q)) == 1) candidates.emplace_back(p, q);
      }
    }
    if (candidates.empty()) break;
    if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);
    const auto [p, q] = candidates.front();
    const auto [a, b] = out.curves_of.at(p);
    for (CurveId c : {a, b}) std::erase_if(out.along[c], [&](const std::string& l) { return l == p || l == q; });
    ++rep.removed;
  }
  rep.crossings_after = total_crossings(out);
  if (rep.crossings_after != rep.crossings_before - 2 * rep.removed) throw CheckFailure("bigon removal lost count");
  const auto check = check_weak_realisation(out);
  if (!check.valid) throw CheckFailure("bigon removal broke the weak realisation: " + check.reason);
  if (report) *report = rep;
  return out;
}

Census crossing_census(const Arrangement& arrangement) {
  Census census;
  const auto ig = intersection_graph(arrangement);
  for (std::size_t v = 0; v < ig.ids.size(); ++v) {
    CensusEntry e;
    e.count = static_cast<int>(arrangement.events_on(ig.ids[v]).size());
    e.degree = ig.graph.degree(static_cast<int>(v));
    e.bound = evaluate_bound("localised", {{"Delta", e.degree}});
    e.within_bound = BigInt(e.count) <= e.bound;
    census.max_count = std::max(census.max_count, e.count);
    census.all_within_bound = census.all_within_bound && e.within_bound;
    census.curves[ig.ids[v]] = e;
  }
  return census;
}

nlohmann::json census_to_json(const Census& census) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [c, e] : census.curves) {
    j[std::to_string(c)] = {{"count", e.count}, {"degree", e.degree}, {"bound", bigint_to_json(e.bound)}, {"within_bound", e.within_bound}};
  }
  return j;
}

nlohmann::json instance_to_json(const AuxiliaryInstance& instance) {
  nlohmann::json j;
  j["H"]["vertices"] = instance.vertices;
  auto& edges = j["H"]["edges"] = nlohmann::json::array();
  for (const auto& e : instance.edges) edges.push_back({{"curve", e.curve}, {"index", e.index}, {"ends", {e.u, e.v}}});
  auto& r = j["R"] = nlohmann::json::array();
  for (auto [e, f] : instance.R) r.push_back({e, f});
  j["r_degree"] = instance.r_degrees();
  auto& sigma = j["sigma"] = nlohmann::json::object();
  for (const auto& [c, order] : instance.sigma) sigma[std::to_string(c)] = order;
  auto& along = j["drawing"] = nlohmann::json::object();
  for (const auto& [c, labels] : instance.along) along[std::to_string(c)] = labels;
  return j;
}

}  // namespace strandkit
