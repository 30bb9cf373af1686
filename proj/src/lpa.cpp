#include "qq/lpa.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qq/error.hpp"

namespace qq {

std::string_view tag_name(RelationTag tag) {
  switch (tag) {
    case RelationTag::R1: return "R1";
    case RelationTag::R2: return "R2";
    case RelationTag::R3: return "R3";
    case RelationTag::R4: return "R4";
    case RelationTag::R5Sigma: return "R5sig";
    case RelationTag::R5SigmaBar: return "R5sigbar";
    case RelationTag::L1: return "L1";
    case RelationTag::L2: return "L2";
    case RelationTag::L3: return "L3";
    case RelationTag::L4: return "L4";
    case RelationTag::L5: return "L5";
  }
  return "?";
}

std::size_t LpaPresentation::count(RelationTag tag) const {
  return static_cast<std::size_t>(std::count_if(
      relations.begin(), relations.end(), [&](const Relation& r) { return r.tag == tag; }));
}

namespace {

GeneratorSymbol rho(std::size_t v, int i, int j) { return {SymbolKind::Rho, v, i, j}; }
GeneratorSymbol sig(std::size_t a, int i, int j) { return {SymbolKind::Sigma, a, i, j}; }
GeneratorSymbol sigbar(std::size_t a, int i, int j) { return {SymbolKind::SigmaBar, a, i, j}; }

std::optional<GeneratorSymbol> as_rho(const std::optional<MatrixUnit>& u) {
  if (!u) return std::nullopt;
  return rho(u->block, u->row, u->col);
}

Poly image_poly(const std::optional<GeneratorSymbol>& s) {
  return s ? Poly::symbol(*s) : Poly{};
}

}  // namespace

std::optional<GeneratorSymbol> range_image(const QuantumQuiver& q, const GeneratorSymbol& s) {
  switch (s.kind) {
    case SymbolKind::Sigma:
      return as_rho(adjoint_unit(q.range(), {s.block, s.row, s.col}));
    case SymbolKind::SigmaBar:
      return as_rho(adjoint_unit(q.source(), {s.block, s.row, s.col}));
    case SymbolKind::Rho:
      break;
  }
  throw InvalidArgument("range map is defined on sigma symbols only");
}

std::optional<GeneratorSymbol> source_image(const QuantumQuiver& q, const GeneratorSymbol& s) {
  switch (s.kind) {
    case SymbolKind::Sigma:
      return as_rho(adjoint_unit(q.source(), {s.block, s.row, s.col}));
    case SymbolKind::SigmaBar:
      return as_rho(adjoint_unit(q.range(), {s.block, s.row, s.col}));
    case SymbolKind::Rho:
      break;
  }
  throw InvalidArgument("source map is defined on sigma symbols only");
}

LpaPresentation generate_presentation(const QuantumQuiver& q) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  LpaPresentation p;
  p.vertices = vs;
  p.edges = es;

  for (const auto& u : matrix_units(vs)) p.generators.push_back(rho(u.block, u.row, u.col));
  for (const auto& u : matrix_units(es)) p.generators.push_back(sig(u.block, u.row, u.col));
  for (const auto& u : matrix_units(es)) p.generators.push_back(sigbar(u.block, u.row, u.col));
  for (const auto& g : p.generators) {
    if (g.kind == SymbolKind::Rho) continue;
    p.source_map[g] = source_image(q, g);
    p.range_map[g] = range_image(q, g);
  }

  std::set<int> sizes;
  for (const auto& b : vs.blocks()) sizes.insert(b.size);
  auto size_class = [&](int n) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      if (vs.size(v) == n) out.push_back(v);
    }
    return out;
  };

  for (int n : sizes) {
    const auto cls = size_class(n);
    for (auto v : cls) {
      for (auto w : cls) {
        for (int i = 1; i <= n; ++i) {
          for (int k = 1; k <= n; ++k) {
            Poly r;
            for (int j = 1; j <= n; ++j) r.add({rho(v, i, j), rho(w, j, k)}, 1);
            if (v == w) r.add({rho(v, i, k)}, -1);
            p.relations.push_back({RelationTag::R1, std::move(r)});
          }
        }
      }
    }
  }

  for (int n : sizes) {
    const auto cls = size_class(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Poly r;
        for (auto v : cls) r.add({rho(v, i, j)}, 1);
        if (i == j) r.add(Word{}, -1);
        p.relations.push_back({RelationTag::R2, std::move(r)});
      }
    }
  }

  for (std::size_t a = 0; a < es.block_count(); ++a) {
    const int m = es.size(a);
    for (int i = 1; i <= m; ++i) {
      for (int k = 1; k <= m; ++k) {
        Poly r;
        for (int j = 1; j <= m; ++j) r.add({sigbar(a, i, j), sig(a, j, k)}, 1);
        r -= image_poly(p.range_map.at(sig(a, i, k)));
        p.relations.push_back({RelationTag::R3, std::move(r)});
      }
    }
  }

  for (std::size_t v = 0; v < vs.block_count(); ++v) {
    const int n = vs.size(v);
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= n; ++k) {
        const auto targets = coordinate_map(q.source(), {v, i, k});
        if (targets.empty()) continue;
        Poly r = Poly::symbol(rho(v, i, k));
        for (const auto& t : targets) {
          for (int j = 1; j <= es.size(t.block); ++j) {
            r.add({sig(t.block, t.row, j), sigbar(t.block, j, t.col)}, -1);
          }
        }
        p.relations.push_back({RelationTag::R4, std::move(r)});
      }
    }
  }

  auto absorption = [&](RelationTag tag, SymbolKind kind) {
    for (std::size_t a = 0; a < es.block_count(); ++a) {
      const int m = es.size(a);
      for (int i = 1; i <= m; ++i) {
        for (int k = 1; k <= m; ++k) {
          const GeneratorSymbol x{kind, a, i, k};
          Poly right = Poly::symbol(x);
          Poly left = Poly::symbol(x);
          for (int j = 1; j <= m; ++j) {
            const GeneratorSymbol xij{kind, a, i, j};
            const GeneratorSymbol xjk{kind, a, j, k};
            if (auto img = p.range_map.at(xjk)) right.add({xij, *img}, -1);
            if (auto img = p.source_map.at(xij)) left.add({*img, xjk}, -1);
          }
          p.relations.push_back({tag, std::move(right)});
          p.relations.push_back({tag, std::move(left)});
        }
      }
    }
  };
  absorption(RelationTag::R5Sigma, SymbolKind::Sigma);
  absorption(RelationTag::R5SigmaBar, SymbolKind::SigmaBar);
  return p;
}

std::string symbol_key(const LpaPresentation& p, const GeneratorSymbol& s) {
  if (p.classical) {
    switch (s.kind) {
      case SymbolKind::Rho: return "p:" + p.vertices.id(s.block);
      case SymbolKind::Sigma: return "e:" + p.edges.id(s.block);
      case SymbolKind::SigmaBar: return "estar:" + p.edges.id(s.block);
    }
  }
  const auto idx = ":" + std::to_string(s.row) + ":" + std::to_string(s.col);
  switch (s.kind) {
    case SymbolKind::Rho: return "rho:" + p.vertices.id(s.block) + idx;
    case SymbolKind::Sigma: return "sig:" + p.edges.id(s.block) + idx;
    case SymbolKind::SigmaBar: return "sigbar:" + p.edges.id(s.block) + idx;
  }
  return {};
}

std::string symbol_text(const LpaPresentation& p, const GeneratorSymbol& s) {
  if (p.classical) {
    switch (s.kind) {
      case SymbolKind::Rho: return "p_" + p.vertices.id(s.block);
      case SymbolKind::Sigma: return p.edges.id(s.block);
      case SymbolKind::SigmaBar: return p.edges.id(s.block) + "*";
    }
  }
  const auto idx = "_{" + std::to_string(s.row) + "," + std::to_string(s.col) + "}";
  switch (s.kind) {
    case SymbolKind::Rho: return "rho^" + p.vertices.id(s.block) + idx;
    case SymbolKind::Sigma: return "sig^" + p.edges.id(s.block) + idx;
    case SymbolKind::SigmaBar: return "sigbar^" + p.edges.id(s.block) + idx;
  }
  return {};
}

std::string poly_text(const LpaPresentation& p, const Poly& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [word, c] : poly.terms()) {
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const auto mag = c < 0 ? -c : c;
    if (mag != 1 || word.empty()) out << mag;
    if (mag != 1 && !word.empty()) out << " ";
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k) out << " ";
      out << symbol_text(p, word[k]);
    }
    first = false;
  }
  return out.str();
}

std::string render_text(const LpaPresentation& p) {
  std::ostringstream out;
  out << "generators (" << p.generators.size() << "):";
  for (const auto& g : p.generators) out << " " << symbol_text(p, g);
  out << "\nrelations (" << p.relations.size() << "):\n";
  for (const auto& r : p.relations) {
    out << tag_name(r.tag) << ": " << poly_text(p, r.poly) << " = 0\n";
  }
  return out.str();
}

}  // namespace qq
