#include <algorithm>
#include <map>
#include <sstream>

#include "qq/lpa.hpp"

namespace qq {
namespace {

std::string matrix_text(const LpaPresentation& p, SymbolKind kind, std::size_t block,
                        int n) {
  std::ostringstream out;
  out << "(";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out << "; ";
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << " ";
      out << symbol_text(p, {kind, block, i, j});
    }
  }
  out << ")";
  return out.str();
}

// Copies of vertex blocks along the diagonal of `edge`, in offset order.
std::string box_sum(const RegularEmbedding& emb, std::size_t edge) {
  const auto& vs = emb.domain();
  std::vector<std::pair<int, std::size_t>> copies;
  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    for (int o : emb.offsets(v, edge)) copies.emplace_back(o, v);
  }
  std::sort(copies.begin(), copies.end());
  std::string out;
  for (const auto& [o, v] : copies) {
    if (!out.empty()) out += " □ ";
    out += "V_" + vs.id(v);
  }
  return out;
}

std::string wrapped(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::string emit_matrix_form(const QuantumQuiver& q) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  LpaPresentation p;
  p.vertices = vs;
  p.edges = es;

  std::ostringstream out;
  out << "matrices:\n";
  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    out << "  V_" << vs.id(v) << " = " << matrix_text(p, SymbolKind::Rho, v, vs.size(v))
        << "\n";
  }
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    out << "  E_" << es.id(a) << " = " << matrix_text(p, SymbolKind::Sigma, a, es.size(a))
        << "\n";
    out << "  E_" << es.id(a)
        << "* = " << matrix_text(p, SymbolKind::SigmaBar, a, es.size(a)) << "\n";
  }

  out << "relations:\n";
  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    out << "  V_" << vs.id(v) << "^2 = V_" << vs.id(v) << "\n";
  }
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    const auto e = "E_" + es.id(a);
    const auto rng = box_sum(q.range(), a);
    const auto src = box_sum(q.source(), a);
    out << "  " << e << "* " << e << " = " << rng << "\n";
    out << "  " << src << " = " << e << " " << e << "*\n";
    out << "  " << wrapped(src) << " " << e << " = " << e << " = " << e << " "
        << wrapped(rng) << "\n";
    out << "  " << wrapped(rng) << " " << e << "* = " << e << "* = " << e << "* "
        << wrapped(src) << "\n";
  }

  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < vs.block_count(); ++v) classes[vs.size(v)].push_back(v);
  for (const auto& [n, members] : classes) {
    out << "  ";
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) out << " + ";
      out << "V_" << vs.id(members[k]);
    }
    out << " = I_" << n << "\n";
  }
  return out.str();
}

}  // namespace qq
