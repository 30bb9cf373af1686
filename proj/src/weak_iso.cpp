#include <algorithm>
#include <numeric>
#include <tuple>

#include "qq/quiver.hpp"

namespace qq {
namespace {

using Profile = std::pair<int, std::vector<std::tuple<int, int, int>>>;

Profile vertex_profile(const QuantumQuiver& q, std::size_t v) {
  Profile p{q.vertex_shape().size(v), {}};
  for (std::size_t a = 0; a < q.edge_shape().block_count(); ++a) {
    const int s = q.source().table().at(v, a);
    const int r = q.range().table().at(v, a);
    if (s != 0 || r != 0) p.second.emplace_back(q.edge_shape().size(a), s, r);
  }
  std::sort(p.second.begin(), p.second.end());
  return p;
}

Profile edge_profile(const QuantumQuiver& q, std::size_t a) {
  Profile p{q.edge_shape().size(a), {}};
  for (std::size_t v = 0; v < q.vertex_shape().block_count(); ++v) {
    const int s = q.source().table().at(v, a);
    const int r = q.range().table().at(v, a);
    if (s != 0 || r != 0) p.second.emplace_back(q.vertex_shape().size(v), s, r);
  }
  std::sort(p.second.begin(), p.second.end());
  return p;
}

std::vector<std::size_t> sorted_by_id(const AlgebraShape& shape) {
  std::vector<std::size_t> idx(shape.block_count());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t x, std::size_t y) { return shape.id(x) < shape.id(y); });
  return idx;
}

class Search {
 public:
  Search(const QuantumQuiver& a, const QuantumQuiver& b) : a_(a), b_(b) {
    av_ = sorted_by_id(a.vertex_shape());
    bv_ = sorted_by_id(b.vertex_shape());
    ae_ = sorted_by_id(a.edge_shape());
    be_ = sorted_by_id(b.edge_shape());
    for (std::size_t v = 0; v < a.vertex_shape().block_count(); ++v) {
      avp_.push_back(vertex_profile(a, v));
    }
    for (std::size_t v = 0; v < b.vertex_shape().block_count(); ++v) {
      bvp_.push_back(vertex_profile(b, v));
    }
    for (std::size_t e = 0; e < a.edge_shape().block_count(); ++e) {
      aep_.push_back(edge_profile(a, e));
    }
    for (std::size_t e = 0; e < b.edge_shape().block_count(); ++e) {
      bep_.push_back(edge_profile(b, e));
    }
  }

  std::optional<WeakIsoWitness> run() {
    if (av_.size() != bv_.size() || ae_.size() != be_.size()) return std::nullopt;
    fv_.assign(av_.size(), 0);
    fe_.assign(ae_.size(), 0);
    usedv_.assign(bv_.size(), false);
    usede_.assign(be_.size(), false);
    if (!assign_vertex(0)) return std::nullopt;
    WeakIsoWitness w;
    w.vertex_map = fv_;
    w.edge_map = fe_;
    w.full_isomorphism = b_.edge_shape().is_commutative();
    return w;
  }

 private:
  // Multisets of edge columns restricted to the first `depth` assigned
  // vertices must agree between a and its image in b.
  bool restricted_columns_agree(std::size_t depth) const {
    using Col = std::vector<std::pair<int, int>>;
    std::vector<std::pair<int, Col>> ca, cb;
    for (std::size_t e = 0; e < ae_.size(); ++e) {
      Col c;
      for (std::size_t k = 0; k < depth; ++k) {
        c.emplace_back(a_.source().table().at(av_[k], e),
                       a_.range().table().at(av_[k], e));
      }
      ca.emplace_back(a_.edge_shape().size(e), std::move(c));
    }
    for (std::size_t e = 0; e < be_.size(); ++e) {
      Col c;
      for (std::size_t k = 0; k < depth; ++k) {
        const auto img = fv_[av_[k]];
        c.emplace_back(b_.source().table().at(img, e), b_.range().table().at(img, e));
      }
      cb.emplace_back(b_.edge_shape().size(e), std::move(c));
    }
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
  }

  bool assign_vertex(std::size_t depth) {
    if (depth == av_.size()) return assign_edge(0);
    const auto v = av_[depth];
    for (auto w : bv_) {
      if (usedv_[w] || avp_[v] != bvp_[w]) continue;
      fv_[v] = w;
      usedv_[w] = true;
      if (restricted_columns_agree(depth + 1) && assign_vertex(depth + 1)) return true;
      usedv_[w] = false;
    }
    return false;
  }

  bool column_matches(std::size_t e, std::size_t f) const {
    for (std::size_t v = 0; v < av_.size(); ++v) {
      if (a_.source().table().at(v, e) != b_.source().table().at(fv_[v], f)) return false;
      if (a_.range().table().at(v, e) != b_.range().table().at(fv_[v], f)) return false;
    }
    return true;
  }

  bool assign_edge(std::size_t depth) {
    if (depth == ae_.size()) return true;
    const auto e = ae_[depth];
    for (auto f : be_) {
      if (usede_[f] || aep_[e] != bep_[f] || !column_matches(e, f)) continue;
      fe_[e] = f;
      usede_[f] = true;
      if (assign_edge(depth + 1)) return true;
      usede_[f] = false;
    }
    return false;
  }

  const QuantumQuiver& a_;
  const QuantumQuiver& b_;
  std::vector<std::size_t> av_, bv_, ae_, be_;
  std::vector<Profile> avp_, bvp_, aep_, bep_;
  std::vector<std::size_t> fv_, fe_;
  std::vector<bool> usedv_, usede_;
};

}  // namespace

std::optional<WeakIsoWitness> weak_iso(const QuantumQuiver& a, const QuantumQuiver& b) {
  return Search(a, b).run();
}

bool is_weak_iso_witness(const QuantumQuiver& a, const QuantumQuiver& b,
                         const WeakIsoWitness& w) {
  const auto nv = a.vertex_shape().block_count();
  const auto ne = a.edge_shape().block_count();
  if (nv != b.vertex_shape().block_count() || ne != b.edge_shape().block_count()) {
    return false;
  }
  if (w.vertex_map.size() != nv || w.edge_map.size() != ne) return false;
  auto bijective = [](const std::vector<std::size_t>& m, std::size_t n) {
    std::vector<bool> hit(n, false);
    for (auto x : m) {
      if (x >= n || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  };
  if (!bijective(w.vertex_map, nv) || !bijective(w.edge_map, ne)) return false;
  for (std::size_t v = 0; v < nv; ++v) {
    if (a.vertex_shape().size(v) != b.vertex_shape().size(w.vertex_map[v])) return false;
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (a.edge_shape().size(e) != b.edge_shape().size(w.edge_map[e])) return false;
    for (std::size_t v = 0; v < nv; ++v) {
      if (a.source().table().at(v, e) !=
              b.source().table().at(w.vertex_map[v], w.edge_map[e]) ||
          a.range().table().at(v, e) !=
              b.range().table().at(w.vertex_map[v], w.edge_map[e])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qq
