#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qq/io.hpp"
#include "qq/quiver.hpp"

namespace qqtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(QQ_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline qq::QuantumQuiver load(const std::string& name) {
  return qq::parse_qq(read_fixture(name));
}

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline qq::DirectedGraph random_graph(std::mt19937& rng, int max_vertices, int max_edges) {
  const int nv = uniform(rng, 1, max_vertices);
  const int ne = uniform(rng, 0, max_edges);
  std::vector<std::string> vertices;
  for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<qq::GraphEdge> edges;
  for (int e = 0; e < ne; ++e) {
    edges.push_back({"e" + std::to_string(e), vertices[uniform(rng, 0, nv - 1)],
                     vertices[uniform(rng, 0, nv - 1)]});
  }
  return qq::DirectedGraph(vertices, edges);
}

// Orders with sum_v n_v * order = m for one edge block, or empty on failure.
inline std::vector<int> random_orders(std::mt19937& rng, const std::vector<int>& sizes,
                                      int m) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> orders(sizes.size(), 0);
    std::vector<std::size_t> idx(sizes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    int left = m;
    for (auto v : idx) {
      orders[v] = uniform(rng, 0, left / sizes[v]);
      left -= orders[v] * sizes[v];
    }
    if (left == 0) return orders;
  }
  return {};
}

// Copies of each vertex placed in a random order along the diagonal.
inline qq::RegularEmbedding random_embedding(std::mt19937& rng, const qq::OrderTable& t) {
  const auto nv = t.domain().block_count();
  const auto ne = t.codomain().block_count();
  std::vector<std::vector<int>> offsets(nv * ne);
  for (std::size_t a = 0; a < ne; ++a) {
    std::vector<std::size_t> copies;
    for (std::size_t v = 0; v < nv; ++v) {
      for (int c = 0; c < t.at(v, a); ++c) copies.push_back(v);
    }
    std::shuffle(copies.begin(), copies.end(), rng);
    int cursor = 0;
    for (auto v : copies) {
      offsets[v * ne + a].push_back(cursor);
      cursor += t.domain().size(v);
    }
  }
  return qq::RegularEmbedding(t, offsets);
}

struct RandomQuiverOptions {
  int max_vertices = 4;
  int max_vertex_size = 3;
  int max_edges = 3;
  int max_order = 2;
  bool random_embeddings = true;
};

inline qq::QuantumQuiver random_quiver(std::mt19937& rng, const RandomQuiverOptions& opts = {}) {
  const int nv = uniform(rng, 1, opts.max_vertices);
  std::vector<qq::Block> vb;
  std::vector<int> sizes;
  for (int v = 0; v < nv; ++v) {
    sizes.push_back(uniform(rng, 1, opts.max_vertex_size));
    vb.push_back({"v" + std::to_string(v), sizes.back()});
  }
  const int ne = uniform(rng, 0, opts.max_edges);
  std::vector<std::vector<int>> s_cols, r_cols;
  std::vector<qq::Block> eb;
  for (int a = 0; a < ne; ++a) {
    std::vector<int> s(nv);
    int m = 0;
    for (int v = 0; v < nv; ++v) {
      s[v] = uniform(rng, 0, opts.max_order);
      m += s[v] * sizes[v];
    }
    if (m == 0) {
      s[0] = 1;
      m = sizes[0];
    }
    auto r = random_orders(rng, sizes, m);
    if (r.empty()) r = s;
    eb.push_back({"a" + std::to_string(a), m});
    s_cols.push_back(s);
    r_cols.push_back(r);
  }
  qq::AlgebraShape vs(vb), es(eb);
  qq::OrderTable st(vs, es), rt(vs, es);
  for (int a = 0; a < ne; ++a) {
    for (int v = 0; v < nv; ++v) {
      st.set(static_cast<std::size_t>(v), static_cast<std::size_t>(a), s_cols[a][v]);
      rt.set(static_cast<std::size_t>(v), static_cast<std::size_t>(a), r_cols[a][v]);
    }
  }
  if (opts.random_embeddings) {
    return qq::QuantumQuiver(random_embedding(rng, st), random_embedding(rng, rt));
  }
  return qq::QuantumQuiver::from_orders(st, rt);
}

// Same quiver with fresh ids and both block lists permuted.
inline qq::QuantumQuiver relabel(std::mt19937& rng, const qq::QuantumQuiver& q) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  std::vector<std::size_t> pv(vs.block_count()), pe(es.block_count());
  for (std::size_t i = 0; i < pv.size(); ++i) pv[i] = i;
  for (std::size_t i = 0; i < pe.size(); ++i) pe[i] = i;
  std::shuffle(pv.begin(), pv.end(), rng);
  std::shuffle(pe.begin(), pe.end(), rng);
  std::vector<qq::Block> vb, eb;
  for (auto v : pv) vb.push_back({"x" + vs.id(v), vs.size(v)});
  for (auto a : pe) eb.push_back({"y" + es.id(a), es.size(a)});
  qq::AlgebraShape nvs(vb), nes(eb);
  auto move = [&](const qq::RegularEmbedding& emb) {
    qq::OrderTable t(nvs, nes);
    std::vector<std::vector<int>> offs(pv.size() * pe.size());
    for (std::size_t i = 0; i < pv.size(); ++i) {
      for (std::size_t j = 0; j < pe.size(); ++j) {
        t.set(i, j, emb.table().at(pv[i], pe[j]));
        const auto o = emb.offsets(pv[i], pe[j]);
        offs[i * pe.size() + j].assign(o.begin(), o.end());
      }
    }
    return qq::RegularEmbedding(t, offs);
  };
  return qq::QuantumQuiver(move(q.source()), move(q.range()));
}

// Vertex x of size n feeding edge a of size kn with k copies; y of size kn
// receives a once.
inline qq::QuantumQuiver module_type_quiver(int n, int k) {
  qq::AlgebraShape vs({{"x", n}, {"y", k * n}});
  qq::AlgebraShape es({{"a", k * n}});
  qq::OrderTable s(vs, es), r(vs, es);
  s.set("x", "a", k);
  r.set("y", "a", 1);
  return qq::QuantumQuiver::from_orders(s, r);
}

}  // namespace qqtest
