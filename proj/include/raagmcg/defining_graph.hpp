#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raagmcg/error.hpp"

namespace raagmcg {

// Position of a generator in the graph's input order. All deterministic
// tie-breaking downstream uses this order.
using VertexId = std::size_t;
using VertexSet = std::set<VertexId>;

// Unvalidated graph description, as read from JSON or built by hand.
struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Returns the first invariant violation of `spec`, or nothing if it is valid.
std::optional<Error> validate(const GraphSpec& spec);

class DefiningGraph;
using GraphPtr = std::shared_ptr<const DefiningGraph>;

/// Defining graph of a right-angled Artin group: vertices are generators,
/// edges are commutation relations. Immutable once created; share it through
/// GraphPtr.
class DefiningGraph {
 public:
  /// Validates `spec` and freezes it. Throws Error on the first violation.
  static GraphPtr create(const GraphSpec& spec);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(VertexId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<VertexId> find(const std::string& label) const;
  /// Throws UnknownVertex.
  VertexId index(const std::string& label) const;
  VertexSet vertex_set(const std::vector<std::string>& labels) const;
  VertexSet all_vertices() const;

  bool adjacent(VertexId u, VertexId v) const;
  /// True when the generators commute: equal, or joined by an edge.
  bool commute(VertexId u, VertexId v) const { return u == v || adjacent(u, v); }

  /// {v} together with its neighbours.
  VertexSet star(VertexId v) const;

  /// Edges as index pairs (u < v), lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::size_t edge_count() const;

  /// Same vertices; u, v adjacent in the result iff they are distinct and not
  /// adjacent here.
  GraphPtr complement() const;

  /// Connected components of the subgraph induced on `subset`, each part
  /// ordered by vertex order and the parts ordered by their least vertex.
  std::vector<VertexSet> components(const VertexSet& subset) const;

  GraphSpec spec() const;

  friend bool operator==(const DefiningGraph& a, const DefiningGraph& b);

 private:
  DefiningGraph() = default;
  void check_vertex(VertexId v) const;

  std::vector<std::string> labels_;
  std::vector<bool> adjacency_;  // row-major size() x size()
};

// Small named graphs used by tests, the CLI and documentation.
GraphPtr cycle_graph(const std::vector<std::string>& labels);
GraphPtr complete_graph(const std::vector<std::string>& labels);
GraphPtr edgeless_graph(const std::vector<std::string>& labels);
/// C5 on a..e with edges ab, bc, cd, de, ea.
GraphPtr pentagon_graph();

// {"vertices":[...], "edges":[["a","b"],...]}
nlohmann::ordered_json to_json(const DefiningGraph& graph);
GraphSpec graph_spec_from_json(const nlohmann::json& j);
GraphPtr graph_from_json(const nlohmann::json& j);

/// Undirected Graphviz rendering.
std::string to_dot(const DefiningGraph& graph, const std::string& name = "G");

/// Double-quoted Graphviz identifier.
std::string dot_quote(const std::string& s);

std::string format_vertex_set(const DefiningGraph& graph, const VertexSet& set);

}  // namespace raagmcg
