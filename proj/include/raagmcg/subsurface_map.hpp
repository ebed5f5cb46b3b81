#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "raagmcg/rational.hpp"
#include "raagmcg/syllables.hpp"

namespace raagmcg {

/// phi(prefix)(X_base). Mapping classes of generators in star(base) fix
/// X_base, so the prefix only matters modulo the special subgroup
/// <star(base)>.
struct MappedSubsurface {
  Word prefix;
  VertexId base = 0;
};

/// (u, i) = (v, j) iff i = j and u^-1 v lies in <star(i)>.
bool same_subsurface(const MappedSubsurface& a, const MappedSubsurface& b);

/// Disjointness in the model: the bases are adjacent and u^-1 v lies in
/// <star(i)> <star(j)>, so both are translates of X_i, X_j by a common mapping
/// class.
bool disjoint_in_model(const MappedSubsurface& a, const MappedSubsurface& b);

struct MappedSyllable {
  SyllableId syllable;
  MappedSubsurface subsurface;
};

/// X^w for a literal minimal word: syllable i goes to
/// (x_1^{e_1} ... x_{i-1}^{e_{i-1}}, J(i)). Prefixes are normalized.
std::vector<MappedSyllable> x_of_word(const Word& minimal_word);

/// X^sigma evaluated on the canonical word, in canonical order.
std::vector<MappedSyllable> x_sigma(const Word& sigma);

struct Counterexample {
  std::string description;
};

/// X^w agrees with X^sigma for every w in Min(sigma). Throws CapExceeded.
std::optional<Counterexample> check_well_defined(const Word& sigma, std::size_t cap = kDefaultCap);

/// X^sigma is injective, and syllables incomparable under the syllable order
/// land on disjoint subsurfaces.
std::optional<Counterexample> check_injective_order(const Word& sigma);

/// Model parameters for the quasi-isometry lower bound. None of these are
/// derived from an actual surface.
struct Constants {
  Rational K0;
  /// Bound on the base projections d_{X_j}(boundary X_i, mu), i != j.
  Rational D;
  Rational K;
  Rational C;
  Rational A;
  Rational B;
  /// Translation length of f_v on the curve complex of X_v.
  std::map<VertexId, Rational> tau;
};

/// K = K0 + 20 + 2D, C = 2K, every tau(v) = C.
Constants make_constants(const DefiningGraph& graph, Rational K0, Rational D, Rational A,
                         Rational B);
/// K0 = 10, D = 6 (so K = 42, C = 84), A = 2, B = 10.
Constants default_constants(const DefiningGraph& graph);

/// Returns InvalidConstants describing the first violated invariant.
std::optional<Error> validate(const Constants& c, const DefiningGraph& graph);

nlohmann::ordered_json to_json(const Constants& c, const DefiningGraph& graph);

struct CertificateEntry {
  SyllableId syllable;
  MappedSubsurface subsurface;
  /// K |e_i|
  Rational bound;
};

struct Certificate {
  Word sigma;
  Constants constants;
  std::vector<CertificateEntry> entries;
  Rational total;
  /// Marking graph, Weil-Petersson and Teichmueller lower bounds, in that
  /// order, written in the basepoint marking mu.
  std::vector<std::string> templates;
};

/// Throws InvalidConstants.
Certificate make_certificate(const Word& sigma, const Constants& constants);

nlohmann::ordered_json to_json(const Certificate& cert);

}  // namespace raagmcg
