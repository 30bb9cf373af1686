#include <sstream>

#include "qq/quiver.hpp"

namespace qq {
namespace {

std::string tex_escape(const std::string& id) {
  std::string out;
  for (char c : id) {
    if (c == '_') out += "\\_";
    else out += c;
  }
  return out;
}

std::string emit_dot(const QuantumQuiver& q) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  std::ostringstream out;
  out << "digraph qq {\n";
  for (const auto& b : vs.blocks()) {
    out << "  v_" << b.id << " [shape=circle, label=\"" << b.size << "\", xlabel=\""
        << b.id << "\"];\n";
  }
  for (const auto& b : es.blocks()) {
    out << "  e_" << b.id << " [shape=box, peripheries=0, label=\"" << b.size
        << "\", xlabel=\"" << b.id << "\"];\n";
  }
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      for (int k = 0; k < q.source().table().at(v, a); ++k) {
        out << "  e_" << es.id(a) << " -> v_" << vs.id(v) << " [dir=none];\n";
      }
    }
  }
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      for (int k = 0; k < q.range().table().at(v, a); ++k) {
        out << "  e_" << es.id(a) << " -> v_" << vs.id(v) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

// Parallel strokes fan out symmetrically; a single stroke stays straight.
void tikz_strokes(std::ostream& out, const char* style, const std::string& from,
                  const std::string& to, int count) {
  for (int k = 0; k < count; ++k) {
    const int bend = 20 * (2 * k - (count - 1));
    out << "\\draw[" << style << "] (" << from << ")";
    if (bend == 0) {
      out << "--";
    } else if (bend > 0) {
      out << " to [bend left=" << bend << "] ";
    } else {
      out << " to [bend right=" << -bend << "] ";
    }
    out << "(" << to << ");\n";
  }
}

std::string emit_tikz(const QuantumQuiver& q) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  std::ostringstream out;
  out << "\\begin{tikzpicture}[\n"
      << "vertex/.style={circle, draw=black, ultra thick, minimum size=7mm},\n"
      << "edge/.style={rectangle, minimum size=7mm},\n"
      << "]\n";
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    out << "\\node[edge] [label = {$" << tex_escape(es.id(a)) << "$}] (e_" << es.id(a)
        << ") at (" << 2 * a << ",0) {" << es.size(a) << "};\n";
  }
  // Vertices that are sources somewhere go above the edge row, the rest below.
  int above = 0;
  int below = 0;
  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    bool is_source = false;
    for (std::size_t a = 0; a < es.block_count(); ++a) {
      if (q.source().table().at(v, a) > 0) is_source = true;
    }
    const int x = is_source ? 2 * above++ - 1 : 2 * below++ - 1;
    out << "\\node[vertex] [label = {$" << tex_escape(vs.id(v)) << "$}] (v_" << vs.id(v)
        << ") at (" << x << "," << (is_source ? 1 : -1) << ") {" << vs.size(v) << "};\n";
  }
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      tikz_strokes(out, "-", "v_" + vs.id(v), "e_" + es.id(a),
                   q.source().table().at(v, a));
    }
  }
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      tikz_strokes(out, "->", "e_" + es.id(a), "v_" + vs.id(v),
                   q.range().table().at(v, a));
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::string emit_diagram(const QuantumQuiver& quiver, DiagramFormat format) {
  return format == DiagramFormat::Dot ? emit_dot(quiver) : emit_tikz(quiver);
}

}  // namespace qq
