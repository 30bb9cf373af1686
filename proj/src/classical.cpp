#include <cstdint>
#include <map>
#include <utility>

#include "qq/lpa.hpp"

namespace qq {
namespace {

GeneratorSymbol p_of(std::size_t v) { return {SymbolKind::Rho, v, 1, 1}; }
GeneratorSymbol e_of(std::size_t e) { return {SymbolKind::Sigma, e, 1, 1}; }
GeneratorSymbol estar_of(std::size_t e) { return {SymbolKind::SigmaBar, e, 1, 1}; }

}  // namespace

LpaPresentation classical_lpa(const DirectedGraph& g) {
  LpaPresentation p;
  p.classical = true;
  std::vector<Block> vb;
  for (const auto& v : g.vertices()) vb.push_back({v, 1});
  std::vector<Block> eb;
  for (const auto& e : g.edges()) eb.push_back({e.id, 1});
  p.vertices = AlgebraShape(std::move(vb));
  p.edges = AlgebraShape(std::move(eb));

  const auto nv = g.vertices().size();
  const auto ne = g.edges().size();
  std::vector<std::size_t> src(ne), rng(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    src[e] = g.vertex_index(g.edges()[e].source);
    rng[e] = g.vertex_index(g.edges()[e].range);
  }

  for (std::size_t v = 0; v < nv; ++v) p.generators.push_back(p_of(v));
  for (std::size_t e = 0; e < ne; ++e) p.generators.push_back(e_of(e));
  for (std::size_t e = 0; e < ne; ++e) p.generators.push_back(estar_of(e));
  for (std::size_t e = 0; e < ne; ++e) {
    p.source_map[e_of(e)] = p_of(src[e]);
    p.range_map[e_of(e)] = p_of(rng[e]);
    p.source_map[estar_of(e)] = p_of(rng[e]);
    p.range_map[estar_of(e)] = p_of(src[e]);
  }

  // p_v p_w = delta_{v,w} p_v
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t w = 0; w < nv; ++w) {
      Poly r = Poly::monomial({p_of(v), p_of(w)});
      if (v == w) r.add({p_of(v)}, -1);
      p.relations.push_back({RelationTag::L1, std::move(r)});
    }
  }
  // s(e) e = e = e r(e)
  for (std::size_t e = 0; e < ne; ++e) {
    p.relations.push_back(
        {RelationTag::L2, Poly::monomial({p_of(src[e]), e_of(e)}) - Poly::symbol(e_of(e))});
    p.relations.push_back(
        {RelationTag::L2, Poly::monomial({e_of(e), p_of(rng[e])}) - Poly::symbol(e_of(e))});
  }
  // r(e) e* = e* = e* s(e)
  for (std::size_t e = 0; e < ne; ++e) {
    p.relations.push_back({RelationTag::L3, Poly::monomial({p_of(rng[e]), estar_of(e)}) -
                                                Poly::symbol(estar_of(e))});
    p.relations.push_back({RelationTag::L3, Poly::monomial({estar_of(e), p_of(src[e])}) -
                                                Poly::symbol(estar_of(e))});
  }
  // e* f = delta_{e,f} p_{r(f)}
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t f = 0; f < ne; ++f) {
      Poly r = Poly::monomial({estar_of(e), e_of(f)});
      if (e == f) r.add({p_of(rng[f])}, -1);
      p.relations.push_back({RelationTag::L4, std::move(r), e != f});
    }
  }
  // p_v = sum_{s(e) = v} e e* for regular v
  for (std::size_t v = 0; v < nv; ++v) {
    Poly r = Poly::symbol(p_of(v));
    bool regular = false;
    for (std::size_t e = 0; e < ne; ++e) {
      if (src[e] != v) continue;
      regular = true;
      r.add({e_of(e), estar_of(e)}, -1);
    }
    if (regular) p.relations.push_back({RelationTag::L5, std::move(r)});
  }
  return p;
}

ClassicalComparison compare_classical(const QuantumQuiver& q) {
  const auto graph = to_graph(q);
  ClassicalComparison cmp;
  cmp.classical = classical_lpa(graph);
  const auto quantum = generate_presentation(q);

  Poly unit_sum = Poly::unit(-1);
  for (std::size_t v = 0; v < graph.vertices().size(); ++v) {
    unit_sum.add({p_of(v)}, 1);
  }
  const auto unit_key = canonical(unit_sum);

  using Key = std::vector<std::pair<Word, std::int64_t>>;
  auto key_of = [](const Poly& p) {
    const auto c = canonical(p);
    return Key(c.terms().begin(), c.terms().end());
  };
  std::map<Key, std::vector<std::size_t>> pool;
  for (std::size_t k = 0; k < quantum.relations.size(); ++k) {
    pool[key_of(quantum.relations[k].poly)].push_back(k);
  }
  std::vector<bool> used(quantum.relations.size(), false);

  for (const auto& rel : cmp.classical.relations) {
    auto it = pool.find(key_of(rel.poly));
    if (it != pool.end() && !it->second.empty()) {
      used[it->second.back()] = true;
      it->second.pop_back();
      ++cmp.matched[rel.tag];
    } else if (rel.cross_edge) {
      cmp.missing_cross_edge.push_back(rel.poly);
    } else {
      cmp.missing_other.push_back(rel);
    }
  }
  for (std::size_t k = 0; k < quantum.relations.size(); ++k) {
    if (used[k]) continue;
    const auto& rel = quantum.relations[k];
    if (rel.tag == RelationTag::R2 && canonical(rel.poly) == unit_key) {
      cmp.unit_relation = true;
      continue;
    }
    cmp.extra.push_back(rel);
  }
  return cmp;
}

}  // namespace qq
