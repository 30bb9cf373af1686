#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qq/algebra.hpp"
#include "qq/hom.hpp"

namespace qq {

/// (B0, B1, r, s) with both homomorphisms given as regular embeddings.
class QuantumQuiver {
 public:
  QuantumQuiver() = default;
  // Throws ValidationError if the embeddings do not share domain and codomain.
  QuantumQuiver(RegularEmbedding source, RegularEmbedding range);

  /// Canonical embeddings for both order tables.
  static QuantumQuiver from_orders(const OrderTable& source, const OrderTable& range);

  const AlgebraShape& vertex_shape() const noexcept { return source_.domain(); }
  const AlgebraShape& edge_shape() const noexcept { return source_.codomain(); }
  const RegularEmbedding& source() const noexcept { return source_; }
  const RegularEmbedding& range() const noexcept { return range_; }

  bool is_commutative() const noexcept;
  bool is_disconnected() const noexcept { return edge_shape().empty(); }

  friend bool operator==(const QuantumQuiver&, const QuantumQuiver&) = default;

 private:
  RegularEmbedding source_;
  RegularEmbedding range_;
};

struct GraphEdge {
  std::string id;
  std::string source;
  std::string range;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

class DirectedGraph {
 public:
  DirectedGraph() = default;
  // Throws InvalidArgument on duplicate ids, UnknownIdError on bad endpoints.
  DirectedGraph(std::vector<std::string> vertices, std::vector<GraphEdge> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  std::size_t vertex_index(std::string_view id) const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
};

QuantumQuiver from_graph(const DirectedGraph& graph);
// Throws NonCommutativeError naming the first block of size > 1.
DirectedGraph to_graph(const QuantumQuiver& quiver);

struct CompletenessResult {
  bool complete = true;
  std::optional<std::size_t> failing_vertex;
  // For the failing vertex: the diagonal units r*s(1_v) actually produced,
  // with multiplicity, in matrix_units order.
  std::vector<MatrixUnit> failing_image;
};

/// r*s(1_v) == 1 for every vertex block v, evaluated on the given embeddings.
CompletenessResult is_complete(const QuantumQuiver& quiver);

struct DivisibilityResult {
  bool ok = true;
  std::optional<std::size_t> failing_vertex;
  std::int64_t total = 0;  // sum_w n_w
};

/// Necessary condition for completeness: n_v divides sum_w n_w for all v.
DivisibilityResult divisibility_check(const QuantumQuiver& quiver);

struct WeakIsoWitness {
  std::vector<std::size_t> vertex_map;  // index in a -> index in b
  std::vector<std::size_t> edge_map;
  // Edge algebra commutative: the witness is an isomorphism.
  bool full_isomorphism = false;
};

/// First witness in lexicographic order over ids sorted ascending, or nullopt.
std::optional<WeakIsoWitness> weak_iso(const QuantumQuiver& a, const QuantumQuiver& b);

/// Checks that `w` is a size-preserving bijection matching both order tables.
bool is_weak_iso_witness(const QuantumQuiver& a, const QuantumQuiver& b,
                         const WeakIsoWitness& w);

enum class DiagramFormat { Dot, Tikz };

// Throws InvalidArgument for anything but "dot" / "tikz".
DiagramFormat parse_diagram_format(std::string_view name);

std::string emit_diagram(const QuantumQuiver& quiver, DiagramFormat format);

}  // namespace qq
