#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "raagmcg/defining_graph.hpp"

namespace raagmcg {

using CurveId = std::size_t;
using CurveSet = std::set<CurveId>;

/// Nonannular subsurface X_v. The ambient surface is modelled by a finite set
/// of reference curves: `intersects` lists the curves meeting X_v
/// essentially, `contains` the curves lying inside it (a subset of
/// `intersects`). Two subsurfaces intersect iff one meets a curve the other
/// contains.
struct Subsurface {
  std::string label;
  VertexId vertex = 0;
  CurveSet intersects;
  CurveSet contains;
};

/// Combinatorial model of a realization {X_v} of a defining graph in a
/// surface S.
class Realization {
 public:
  /// Structural checks only (one subsurface per vertex, curve ids in range,
  /// contains within intersects); throws InvalidRealization. Use
  /// validate_realization for the nice-realization conditions.
  Realization(GraphPtr graph, std::string ambient, std::vector<std::string> curves,
              std::vector<Subsurface> subsurfaces);

  const GraphPtr& graph_ptr() const { return graph_; }
  const DefiningGraph& graph() const { return *graph_; }
  const std::string& ambient() const { return ambient_; }
  const std::vector<std::string>& curves() const { return curves_; }
  /// Indexed by vertex.
  const std::vector<Subsurface>& subsurfaces() const { return subsurfaces_; }
  const Subsurface& subsurface(VertexId v) const { return subsurfaces_.at(v); }

  bool meets(VertexId v, CurveId c) const { return subsurface(v).intersects.contains(c); }
  /// X_u and X_v intersect (u != v).
  bool intersect(VertexId u, VertexId v) const;
  /// Necessary condition for X_u being nested in X_v: every curve meeting X_u
  /// also meets X_v.
  bool may_nest(VertexId u, VertexId v) const;

 private:
  GraphPtr graph_;
  std::string ambient_;
  std::vector<std::string> curves_;
  std::vector<Subsurface> subsurfaces_;
};

/// Checks the nice-realization conditions: X_u and X_v are disjoint iff uv is
/// an edge (DisjointnessMismatch), and intersecting subsurfaces overlap
/// rather than nest (NestingDetected). Returns nothing when both hold.
std::optional<Error> validate_realization(const Realization& r);

/// Combinatorial shadow of the annuli-and-tori construction. Each vertex v
/// gets an annulus with core curve gamma_v and a one-holed torus carrying an
/// essential curve tau_v. Annuli of non-adjacent vertices are glued along a
/// product square. X_v contains gamma_v and tau_v and meets gamma_u for every
/// u not adjacent to v.
Realization build_standard_realization(const GraphPtr& graph);

struct FillResult {
  /// One part per component of the complement graph on the queried vertices.
  std::vector<VertexSet> components;
  bool fills_ambient = false;
  CurveSet uncovered_curves;
};

/// Fill of {X_v : v in indices}. The ambient surface counts as filled when
/// every reference curve meets some X_v. Throws UnknownVertex.
FillResult fill(const Realization& r, const VertexSet& indices);

/// {"graph":..., "ambient":..., "curves":[...],
///  "subsurfaces":[{"vertex":"a","label":"X_a","intersects":[...],"contains":[...]}]}
/// "label" and "contains" are optional on input; a missing "contains"
/// defaults to "intersects".
nlohmann::ordered_json to_json(const Realization& r);
Realization realization_from_json(const nlohmann::json& j);

}  // namespace raagmcg
