#include "raagmcg/defining_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace raagmcg {

std::optional<Error> validate(const GraphSpec& spec) {
  std::map<std::string, VertexId> seen;
  for (const auto& label : spec.vertices) {
    if (label.empty()) {
      return Error(ErrorCode::EmptyLabel, "vertex label must be nonempty");
    }
    if (!seen.emplace(label, seen.size()).second) {
      return Error(ErrorCode::DuplicateVertex, "duplicate vertex '" + label + "'");
    }
  }
  for (const auto& [u, v] : spec.edges) {
    for (const auto* end : {&u, &v}) {
      if (!seen.contains(*end)) {
        return Error(ErrorCode::DanglingEdge,
                     "edge " + u + "-" + v + " names unknown vertex '" + *end + "'");
      }
    }
    if (u == v) {
      return Error(ErrorCode::SelfLoop, "self-loop on vertex '" + u + "'");
    }
  }
  return std::nullopt;
}

GraphPtr DefiningGraph::create(const GraphSpec& spec) {
  if (auto err = validate(spec)) {
    throw *err;
  }
  std::shared_ptr<DefiningGraph> g(new DefiningGraph());
  g->labels_ = spec.vertices;
  const auto n = g->labels_.size();
  g->adjacency_.assign(n * n, false);
  for (const auto& [u, v] : spec.edges) {
    const auto i = *g->find(u);
    const auto j = *g->find(v);
    g->adjacency_[i * n + j] = true;
    g->adjacency_[j * n + i] = true;
  }
  return g;
}

void DefiningGraph::check_vertex(VertexId v) const {
  if (v >= size()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  }
}

const std::string& DefiningGraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<VertexId> DefiningGraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId DefiningGraph::index(const std::string& label) const {
  if (auto v = find(label)) {
    return *v;
  }
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + label + "'");
}

VertexSet DefiningGraph::vertex_set(const std::vector<std::string>& labels) const {
  VertexSet out;
  for (const auto& l : labels) {
    out.insert(index(l));
  }
  return out;
}

VertexSet DefiningGraph::all_vertices() const {
  VertexSet out;
  for (VertexId v = 0; v < size(); ++v) {
    out.insert(v);
  }
  return out;
}

bool DefiningGraph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u * size() + v];
}

VertexSet DefiningGraph::star(VertexId v) const {
  check_vertex(v);
  VertexSet out{v};
  for (VertexId u = 0; u < size(); ++u) {
    if (adjacency_[v * size() + u]) {
      out.insert(u);
    }
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> DefiningGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v = u + 1; v < size(); ++v) {
      if (adjacency_[u * size() + v]) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

std::size_t DefiningGraph::edge_count() const { return edges().size(); }

GraphPtr DefiningGraph::complement() const {
  std::shared_ptr<DefiningGraph> g(new DefiningGraph());
  g->labels_ = labels_;
  const auto n = size();
  g->adjacency_.assign(n * n, false);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      g->adjacency_[u * n + v] = u != v && !adjacency_[u * n + v];
    }
  }
  return g;
}

std::vector<VertexSet> DefiningGraph::components(const VertexSet& subset) const {
  for (auto v : subset) {
    check_vertex(v);
  }
  std::vector<VertexSet> parts;
  VertexSet unvisited = subset;
  while (!unvisited.empty()) {
    VertexSet part;
    std::deque<VertexId> queue{*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      part.insert(v);
      for (auto it = unvisited.begin(); it != unvisited.end();) {
        if (adjacency_[v * size() + *it]) {
          queue.push_back(*it);
          it = unvisited.erase(it);
        } else {
          ++it;
        }
      }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

GraphSpec DefiningGraph::spec() const {
  GraphSpec s;
  s.vertices = labels_;
  for (const auto& [u, v] : edges()) {
    s.edges.emplace_back(labels_[u], labels_[v]);
  }
  return s;
}

bool operator==(const DefiningGraph& a, const DefiningGraph& b) {
  return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
}

GraphPtr cycle_graph(const std::vector<std::string>& labels) {
  GraphSpec s{labels, {}};
  const auto n = labels.size();
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      s.edges.emplace_back(labels[i], labels[(i + 1) % n]);
    }
  } else if (n == 2) {
    s.edges.emplace_back(labels[0], labels[1]);
  }
  return DefiningGraph::create(s);
}

GraphPtr complete_graph(const std::vector<std::string>& labels) {
  GraphSpec s{labels, {}};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      s.edges.emplace_back(labels[i], labels[j]);
    }
  }
  return DefiningGraph::create(s);
}

GraphPtr edgeless_graph(const std::vector<std::string>& labels) {
  return DefiningGraph::create(GraphSpec{labels, {}});
}

GraphPtr pentagon_graph() { return cycle_graph({"a", "b", "c", "d", "e"}); }

nlohmann::ordered_json to_json(const DefiningGraph& graph) {
  nlohmann::ordered_json j;
  j["vertices"] = graph.labels();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : graph.edges()) {
    edges.push_back({graph.label(u), graph.label(v)});
  }
  j["edges"] = std::move(edges);
  return j;
}

GraphSpec graph_spec_from_json(const nlohmann::json& j) {
  GraphSpec s;
  try {
    for (const auto& v : j.at("vertices")) {
      s.vertices.push_back(v.get<std::string>());
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw Error(ErrorCode::Parse, "edge must be a two-element array");
        }
        s.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, std::string("malformed graph JSON: ") + ex.what());
  }
  return s;
}

GraphPtr graph_from_json(const nlohmann::json& j) {
  return DefiningGraph::create(graph_spec_from_json(j));
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

std::string to_dot(const DefiningGraph& graph, const std::string& name) {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  for (const auto& l : graph.labels()) {
    os << "  " << dot_quote(l) << ";\n";
  }
  for (const auto& [u, v] : graph.edges()) {
    os << "  " << dot_quote(graph.label(u)) << " -- " << dot_quote(graph.label(v)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string format_vertex_set(const DefiningGraph& graph, const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (auto v : set) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += graph.label(v);
  }
  return out + "}";
}

}  // namespace raagmcg
