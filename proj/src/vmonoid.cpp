#include "qq/vmonoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "checked.hpp"

namespace qq {

std::vector<std::vector<std::size_t>> source_classes(const QuantumQuiver& q) {
  const auto nv = q.vertex_shape().block_count();
  const auto ne = q.edge_shape().block_count();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < ne; ++a) {
    std::optional<std::size_t> first;
    for (std::size_t v = 0; v < nv; ++v) {
      if (q.source().table().at(v, a) == 0) continue;
      if (!first) {
        first = v;
        continue;
      }
      auto x = find(*first);
      auto y = find(v);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < nv; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

MonoidPresentation monoid_presentation(const QuantumQuiver& q) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  MonoidPresentation p;
  p.generators.push_back("FREE");
  for (const auto& b : vs.blocks()) {
    p.vertex_ids.push_back(b.id);
    p.generators.push_back("P:" + b.id);
  }
  const auto dim = p.generators.size();

  std::map<int, std::vector<std::size_t>> sizes;
  for (std::size_t v = 0; v < vs.block_count(); ++v) sizes[vs.size(v)].push_back(v);
  for (const auto& [n, members] : sizes) {
    MonoidRelation r;
    r.tag = MonoidTag::SizeClass;
    r.size = n;
    r.label = std::to_string(n);
    r.lhs.assign(dim, 0);
    r.rhs.assign(dim, 0);
    for (auto v : members) r.lhs[p.vertex_index(v)] = 1;
    r.rhs[p.free_index()] = n;
    p.relations.push_back(std::move(r));
  }

  for (const auto& cls : source_classes(q)) {
    std::int64_t lcm = 1;
    std::vector<bool> in_e(es.block_count(), false);
    bool any = false;
    for (auto v : cls) {
      for (std::size_t a = 0; a < es.block_count(); ++a) {
        const int o = q.source().table().at(v, a);
        if (o == 0) continue;
        any = true;
        in_e[a] = true;
        lcm = std::lcm(lcm, static_cast<std::int64_t>(o));
      }
    }
    if (!any) continue;
    MonoidRelation r;
    r.tag = MonoidTag::Nontrivial;
    r.lcm = lcm;
    r.label = vs.id(cls.front());
    r.lhs.assign(dim, 0);
    r.rhs.assign(dim, 0);
    for (auto v : cls) r.lhs[p.vertex_index(v)] = lcm;
    for (std::size_t a = 0; a < es.block_count(); ++a) {
      if (!in_e[a]) continue;
      for (std::size_t u = 0; u < vs.block_count(); ++u) {
        auto& slot = r.rhs[p.vertex_index(u)];
        slot = detail::checked_add(
            slot, detail::checked_mul(lcm, q.range().table().at(u, a)));
      }
    }
    p.relations.push_back(std::move(r));
  }
  return p;
}

MonoidPresentation graph_monoid(const DirectedGraph& g) {
  MonoidPresentation p;
  p.has_free = false;
  p.vertex_ids = g.vertices();
  for (const auto& v : g.vertices()) p.generators.push_back("P:" + v);
  const auto n = g.vertices().size();
  for (std::size_t v = 0; v < n; ++v) {
    MonoidRelation r;
    r.tag = MonoidTag::Graph;
    r.label = g.vertices()[v];
    r.lhs.assign(n, 0);
    r.rhs.assign(n, 0);
    r.lhs[v] = 1;
    bool regular = false;
    for (const auto& e : g.edges()) {
      if (e.source != g.vertices()[v]) continue;
      regular = true;
      ++r.rhs[g.vertex_index(e.range)];
    }
    if (regular) p.relations.push_back(std::move(r));
  }
  return p;
}

namespace {

std::string atom(const MonoidPresentation& p, std::size_t gen) {
  if (p.has_free && gen == p.free_index()) return "I";
  return "P(" + p.vertex_ids[p.has_free ? gen - 1 : gen] + ")";
}

}  // namespace

std::string element_text(const MonoidPresentation& p, const MonoidElement& x) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t g = 0; g < x.size(); ++g) {
    if (x[g] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (x[g] != 1) out << x[g];
    out << atom(p, g);
  }
  return first ? "0" : out.str();
}

std::string relation_text(const MonoidPresentation& p, const MonoidRelation& r) {
  if (r.tag == MonoidTag::Nontrivial && r.lcm > 1) {
    MonoidElement reduced(r.lhs.size());
    for (std::size_t g = 0; g < r.lhs.size(); ++g) reduced[g] = r.lhs[g] / r.lcm;
    return std::to_string(r.lcm) + "(" + element_text(p, reduced) +
           ") = " + element_text(p, r.rhs);
  }
  return element_text(p, r.lhs) + " = " + element_text(p, r.rhs);
}

std::string tag_text(const MonoidRelation& r) {
  switch (r.tag) {
    case MonoidTag::SizeClass: return "SizeClass(" + r.label + ")";
    case MonoidTag::Nontrivial: return "Nontrivial(" + r.label + ")";
    case MonoidTag::Graph: return "Graph(" + r.label + ")";
  }
  return {};
}

std::string verdict_name(MonoidVerdict v) {
  switch (v) {
    case MonoidVerdict::Equal: return "Equal";
    case MonoidVerdict::NotEqual: return "NotEqual";
    case MonoidVerdict::Inconclusive: return "Inconclusive";
  }
  return {};
}

std::string certificate_text(const MonoidPresentation& p, const SeparatingMap& c) {
  std::ostringstream out;
  switch (c.kind) {
    case SeparatingMap::Kind::Cyclic: out << "homomorphism into Z/" << c.modulus; break;
    case SeparatingMap::Kind::Integer: out << "homomorphism into Z"; break;
    case SeparatingMap::Kind::Truncation:
      out << "homomorphism into the truncated monoid {0.." << c.modulus << "}";
      break;
  }
  out << ":";
  for (std::size_t g = 0; g < c.weights.size(); ++g) {
    out << (g ? ", " : " ") << atom(p, g) << " -> " << c.weights[g];
  }
  out << "; images " << c.image_a << " vs " << c.image_b;
  return out.str();
}

}  // namespace qq
