#include "qq/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qq/error.hpp"

namespace qq {

QuantumQuiver::QuantumQuiver(RegularEmbedding source, RegularEmbedding range)
    : source_(std::move(source)), range_(std::move(range)) {
  if (!(source_.domain() == range_.domain())) {
    throw ValidationError("source and range embeddings have different vertex shapes");
  }
  if (!(source_.codomain() == range_.codomain())) {
    throw ValidationError("source and range embeddings have different edge shapes");
  }
}

QuantumQuiver QuantumQuiver::from_orders(const OrderTable& source,
                                         const OrderTable& range) {
  return QuantumQuiver(canonical_embedding(source), canonical_embedding(range));
}

bool QuantumQuiver::is_commutative() const noexcept {
  return vertex_shape().is_commutative() && edge_shape().is_commutative();
}

DirectedGraph::DirectedGraph(std::vector<std::string> vertices,
                             std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string_view> vs;
  for (const auto& v : vertices_) {
    if (v.empty()) throw InvalidArgument("vertex id must not be empty");
    if (!vs.insert(v).second) throw InvalidArgument("duplicate vertex id '" + v + "'");
  }
  std::set<std::string_view> es;
  for (const auto& e : edges_) {
    if (e.id.empty()) throw InvalidArgument("edge id must not be empty");
    if (!es.insert(e.id).second) throw InvalidArgument("duplicate edge id '" + e.id + "'");
    if (!vs.contains(e.source)) throw UnknownIdError(e.source);
    if (!vs.contains(e.range)) throw UnknownIdError(e.range);
  }
}

std::size_t DirectedGraph::vertex_index(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == id) return i;
  }
  throw UnknownIdError(std::string(id));
}

QuantumQuiver from_graph(const DirectedGraph& graph) {
  std::vector<Block> vb;
  for (const auto& v : graph.vertices()) vb.push_back({v, 1});
  std::vector<Block> eb;
  for (const auto& e : graph.edges()) eb.push_back({e.id, 1});
  AlgebraShape vertices(std::move(vb));
  AlgebraShape edges(std::move(eb));
  OrderTable s(vertices, edges);
  OrderTable r(vertices, edges);
  for (std::size_t a = 0; a < graph.edges().size(); ++a) {
    const auto& e = graph.edges()[a];
    s.set(graph.vertex_index(e.source), a, 1);
    r.set(graph.vertex_index(e.range), a, 1);
  }
  return QuantumQuiver::from_orders(s, r);
}

DirectedGraph to_graph(const QuantumQuiver& quiver) {
  for (const auto& b : quiver.vertex_shape().blocks()) {
    if (b.size != 1) throw NonCommutativeError(b.id);
  }
  for (const auto& b : quiver.edge_shape().blocks()) {
    if (b.size != 1) throw NonCommutativeError(b.id);
  }
  const auto& vs = quiver.vertex_shape();
  const auto& es = quiver.edge_shape();
  std::vector<std::string> vertices;
  for (const auto& b : vs.blocks()) vertices.push_back(b.id);
  std::vector<GraphEdge> edges;
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    // Unitality with all sizes 1 leaves exactly one vertex of order 1.
    const auto& src = quiver.source().slot(a, 0);
    const auto& rng = quiver.range().slot(a, 0);
    edges.push_back({es.id(a), vs.id(src.vertex), vs.id(rng.vertex)});
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

CompletenessResult is_complete(const QuantumQuiver& quiver) {
  const auto& vs = quiver.vertex_shape();
  const auto& es = quiver.edge_shape();
  std::vector<MatrixUnit> expected;
  for (std::size_t w = 0; w < vs.block_count(); ++w) {
    for (int i = 1; i <= vs.size(w); ++i) expected.push_back({w, i, i});
  }

  CompletenessResult result;
  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    std::vector<MatrixUnit> image;
    for (std::size_t a = 0; a < es.block_count(); ++a) {
      for (int o : quiver.source().offsets(v, a)) {
        for (int i = 1; i <= vs.size(v); ++i) {
          if (auto u = adjoint_unit(quiver.range(), {a, o + i, o + i})) {
            image.push_back(*u);
          }
        }
      }
    }
    std::sort(image.begin(), image.end());
    if (image != expected) {
      result.complete = false;
      result.failing_vertex = v;
      result.failing_image = std::move(image);
      return result;
    }
  }
  return result;
}

DivisibilityResult divisibility_check(const QuantumQuiver& quiver) {
  const auto& vs = quiver.vertex_shape();
  DivisibilityResult result;
  result.total = vs.unit_trace();
  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    if (result.total % vs.size(v) != 0) {
      result.ok = false;
      result.failing_vertex = v;
      return result;
    }
  }
  return result;
}

DiagramFormat parse_diagram_format(std::string_view name) {
  if (name == "dot") return DiagramFormat::Dot;
  if (name == "tikz") return DiagramFormat::Tikz;
  throw InvalidArgument("unsupported diagram format '" + std::string(name) +
                        "' (expected dot or tikz)");
}

}  // namespace qq
