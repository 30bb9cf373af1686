#pragma once

// The commutative monoid of finitely generated projective modules: source
// classes, the presentation with FREE and P_v generators, the classical graph
// monoid, and a bounded decision procedure for element equality.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qq/quiver.hpp"

namespace qq {

using MonoidElement = std::vector<std::int64_t>;

enum class MonoidTag { SizeClass, Nontrivial, Graph };

struct MonoidRelation {
  MonoidElement lhs;
  MonoidElement rhs;
  MonoidTag tag = MonoidTag::SizeClass;
  int size = 0;            // SizeClass
  std::int64_t lcm = 1;    // Nontrivial: N of the class
  std::string label;       // SizeClass: "2"; Nontrivial / Graph: a vertex id

  friend bool operator==(const MonoidRelation&, const MonoidRelation&) = default;
};

/// Generators are "FREE" followed by "P:<id>" per vertex when `has_free`;
/// graph monoids have only the P generators.
struct MonoidPresentation {
  bool has_free = true;
  std::vector<std::string> vertex_ids;
  std::vector<std::string> generators;
  std::vector<MonoidRelation> relations;

  std::size_t free_index() const { return 0; }
  std::size_t vertex_index(std::size_t v) const { return has_free ? v + 1 : v; }
};

/// Classes of vertex indices, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> source_classes(const QuantumQuiver& q);

MonoidPresentation monoid_presentation(const QuantumQuiver& q);
MonoidPresentation graph_monoid(const DirectedGraph& g);

// "3I + 2P(v4)", "0" for the zero element.
std::string element_text(const MonoidPresentation& p, const MonoidElement& x);
// "P(v3) + P(v4) = 2I", "2(P(v1) + P(v2)) = 2P(v3) + 4P(v4) + 2P(v5)".
std::string relation_text(const MonoidPresentation& p, const MonoidRelation& r);
std::string tag_text(const MonoidRelation& r);

struct MonoidEqOptions {
  int depth = 6;
  int max_k = 12;
  int max_m = 12;
  std::size_t state_budget = 500000;
  std::size_t truncation_budget = 2000000;
};

enum class MonoidVerdict { Equal, NotEqual, Inconclusive };

struct SeparatingMap {
  enum class Kind { Cyclic, Integer, Truncation } kind = Kind::Cyclic;
  // Z/modulus for Cyclic, ignored for Integer, {0..modulus} for Truncation.
  std::int64_t modulus = 0;
  std::vector<std::int64_t> weights;  // image of each generator
  std::int64_t image_a = 0;
  std::int64_t image_b = 0;
};

struct MonoidEqResult {
  MonoidVerdict verdict = MonoidVerdict::Inconclusive;
  int depth = 0;                    // Equal: BFS levels per side
  std::vector<MonoidElement> path;  // Equal: a ... b, one relation step each
  std::optional<SeparatingMap> certificate;
};

// Throws InvalidArgument on dimension mismatch or negative entries,
// ResourceError on int64 overflow.
MonoidEqResult monoid_eq(const MonoidPresentation& p, const MonoidElement& a,
                         const MonoidElement& b, const MonoidEqOptions& options = {});

std::string verdict_name(MonoidVerdict v);
std::string certificate_text(const MonoidPresentation& p, const SeparatingMap& c);

}  // namespace qq
