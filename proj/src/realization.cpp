#include "raagmcg/realization.hpp"

#include <algorithm>
#include <map>

namespace raagmcg {

Realization::Realization(GraphPtr graph, std::string ambient, std::vector<std::string> curves,
                         std::vector<Subsurface> subsurfaces)
    : graph_(std::move(graph)), ambient_(std::move(ambient)), curves_(std::move(curves)) {
  const auto n = graph_->size();
  std::vector<std::optional<Subsurface>> slots(n);
  for (auto& s : subsurfaces) {
    if (s.vertex >= n) {
      throw Error(ErrorCode::UnknownVertex, "subsurface for unknown vertex index");
    }
    if (slots[s.vertex]) {
      throw Error(ErrorCode::InvalidRealization,
                  "two subsurfaces realize vertex '" + graph_->label(s.vertex) + "'");
    }
    for (auto c : s.intersects) {
      if (c >= curves_.size()) {
        throw Error(ErrorCode::InvalidRealization, "curve id out of range");
      }
    }
    if (!std::includes(s.intersects.begin(), s.intersects.end(), s.contains.begin(),
                       s.contains.end())) {
      throw Error(ErrorCode::InvalidRealization,
                  "subsurface " + s.label + " contains a curve it does not meet");
    }
    slots[s.vertex] = std::move(s);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!slots[v]) {
      throw Error(ErrorCode::InvalidRealization,
                  "no subsurface realizes vertex '" + graph_->label(v) + "'");
    }
    subsurfaces_.push_back(std::move(*slots[v]));
  }
  std::set<std::string> names(curves_.begin(), curves_.end());
  if (names.size() != curves_.size()) {
    throw Error(ErrorCode::InvalidRealization, "duplicate reference curve name");
  }
}

bool Realization::intersect(VertexId u, VertexId v) const {
  const auto& a = subsurface(u);
  const auto& b = subsurface(v);
  auto meets_inside = [](const Subsurface& x, const Subsurface& y) {
    return std::any_of(y.contains.begin(), y.contains.end(),
                       [&](CurveId c) { return x.intersects.contains(c); });
  };
  return meets_inside(a, b) || meets_inside(b, a);
}

bool Realization::may_nest(VertexId u, VertexId v) const {
  const auto& a = subsurface(u).intersects;
  const auto& b = subsurface(v).intersects;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<Error> validate_realization(const Realization& r) {
  const auto& g = r.graph();
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v = u + 1; v < g.size(); ++v) {
      const bool disjoint = !r.intersect(u, v);
      if (disjoint != g.adjacent(u, v)) {
        return Error(ErrorCode::DisjointnessMismatch,
                     "X_" + g.label(u) + " and X_" + g.label(v) + " are " +
                         (disjoint ? "disjoint" : "intersecting") + " but " + g.label(u) +
                         g.label(v) + (g.adjacent(u, v) ? " is" : " is not") + " an edge");
      }
      if (!disjoint && (r.may_nest(u, v) || r.may_nest(v, u))) {
        return Error(ErrorCode::NestingDetected,
                     "X_" + g.label(u) + " and X_" + g.label(v) + " intersect without overlapping");
      }
    }
  }
  return std::nullopt;
}

Realization build_standard_realization(const GraphPtr& graph) {
  const auto n = graph->size();
  std::vector<std::string> curves;
  for (VertexId v = 0; v < n; ++v) {
    curves.push_back("gamma_" + graph->label(v));
  }
  for (VertexId v = 0; v < n; ++v) {
    curves.push_back("tau_" + graph->label(v));
  }
  const auto gamma = [](VertexId v) { return v; };
  const auto tau = [n](VertexId v) { return n + v; };
  std::vector<Subsurface> subsurfaces;
  for (VertexId v = 0; v < n; ++v) {
    Subsurface s;
    s.label = "X_" + graph->label(v);
    s.vertex = v;
    s.contains = {gamma(v), tau(v)};
    s.intersects = s.contains;
    for (VertexId u = 0; u < n; ++u) {
      if (u != v && !graph->adjacent(u, v)) {
        s.intersects.insert(gamma(u));
      }
    }
    subsurfaces.push_back(std::move(s));
  }
  return Realization(graph, "standard(" + std::to_string(n) + ")", std::move(curves),
                     std::move(subsurfaces));
}

FillResult fill(const Realization& r, const VertexSet& indices) {
  FillResult out;
  out.components = r.graph().complement()->components(indices);
  CurveSet covered;
  for (auto v : indices) {
    const auto& s = r.subsurface(v).intersects;
    covered.insert(s.begin(), s.end());
  }
  for (CurveId c = 0; c < r.curves().size(); ++c) {
    if (!covered.contains(c)) {
      out.uncovered_curves.insert(c);
    }
  }
  out.fills_ambient = out.uncovered_curves.empty();
  return out;
}

nlohmann::ordered_json to_json(const Realization& r) {
  nlohmann::ordered_json j;
  j["graph"] = to_json(r.graph());
  j["ambient"] = r.ambient();
  j["curves"] = r.curves();
  auto subs = nlohmann::ordered_json::array();
  auto names = [&](const CurveSet& set) {
    auto arr = nlohmann::ordered_json::array();
    for (auto c : set) {
      arr.push_back(r.curves()[c]);
    }
    return arr;
  };
  for (const auto& s : r.subsurfaces()) {
    nlohmann::ordered_json e;
    e["vertex"] = r.graph().label(s.vertex);
    e["label"] = s.label;
    e["intersects"] = names(s.intersects);
    e["contains"] = names(s.contains);
    subs.push_back(std::move(e));
  }
  j["subsurfaces"] = std::move(subs);
  return j;
}

Realization realization_from_json(const nlohmann::json& j) {
  try {
    auto graph = graph_from_json(j.at("graph"));
    std::vector<std::string> curves = j.at("curves").get<std::vector<std::string>>();
    std::map<std::string, CurveId> curve_ids;
    for (CurveId c = 0; c < curves.size(); ++c) {
      curve_ids.emplace(curves[c], c);
    }
    auto lookup = [&](const std::string& name) {
      auto it = curve_ids.find(name);
      if (it == curve_ids.end()) {
        throw Error(ErrorCode::InvalidRealization, "unknown reference curve '" + name + "'");
      }
      return it->second;
    };
    std::vector<Subsurface> subs;
    for (const auto& e : j.at("subsurfaces")) {
      Subsurface s;
      s.vertex = graph->index(e.at("vertex").get<std::string>());
      s.label = e.value("label", "X_" + graph->label(s.vertex));
      for (const auto& c : e.at("intersects")) {
        s.intersects.insert(lookup(c.get<std::string>()));
      }
      if (e.contains("contains")) {
        for (const auto& c : e.at("contains")) {
          s.contains.insert(lookup(c.get<std::string>()));
        }
      } else {
        s.contains = s.intersects;
      }
      subs.push_back(std::move(s));
    }
    return Realization(graph, j.value("ambient", std::string("S")), std::move(curves),
                       std::move(subs));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, std::string("malformed realization JSON: ") + ex.what());
  }
}

}  // namespace raagmcg
