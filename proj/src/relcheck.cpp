#include "qq/relcheck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qq/error.hpp"
#include "qq/vmonoid.hpp"

namespace qq {
namespace {

constexpr std::size_t kMaxTerms = 10000;
constexpr std::size_t kMaxSteps = 200000;

void guard(const Poly& p) {
  if (p.size() > kMaxTerms) {
    throw ResourceError("expanded entry has " + std::to_string(p.size()) +
                        " terms (limit " + std::to_string(kMaxTerms) + ")");
  }
}

struct Rule {
  std::string tag;
  Poly relation;
  std::vector<std::pair<Word, std::int64_t>> pattern;
};

class Reducer {
 public:
  void add(std::string tag, const Poly& relation) {
    if (relation.is_zero()) return;
    Rule rule{std::move(tag), relation, {}};
    const auto len = relation.max_length();
    for (const auto& [w, c] : relation.terms()) {
      if (w.size() == len) rule.pattern.emplace_back(w, c);
    }
    const auto id = rules_.size();
    for (std::size_t t = 0; t < rule.pattern.size(); ++t) {
      index_[rule.pattern[t].first].emplace_back(id, t);
    }
    lengths_.insert(len);
    rules_.push_back(std::move(rule));
  }

  Poly reduce(Poly p, std::set<std::string>& tags) const {
    for (std::size_t step = 0;; ++step) {
      if (step > kMaxSteps) throw ResourceError("reduction did not terminate");
      guard(p);
      auto m = best_match(p);
      if (!m) return p;
      const auto& rule = rules_[m->rule];
      Poly delta;
      for (const auto& [w, c] : rule.relation.terms()) {
        delta.add(concat(m->left, w, m->right), c);
      }
      Poly next = p;
      next.add(delta, -m->scale);
      Poly check = next;
      check.add(delta, m->scale);
      if (!(check == p)) throw ResourceError("contraction step failed re-expansion");
      tags.insert(rule.tag);
      p = std::move(next);
    }
  }

 private:
  struct Match {
    std::size_t rule;
    Word left;
    Word right;
    std::int64_t scale;
  };

  std::optional<Match> best_match(const Poly& p) const {
    std::optional<Match> best;
    std::size_t best_size = 0;
    for (const auto& [u, cu] : p.terms()) {
      for (auto len : lengths_) {
        if (len == 0 || len > u.size()) continue;
        for (std::size_t pos = 0; pos + len <= u.size(); ++pos) {
          const Word sub(u.begin() + static_cast<std::ptrdiff_t>(pos),
                         u.begin() + static_cast<std::ptrdiff_t>(pos + len));
          auto it = index_.find(sub);
          if (it == index_.end()) continue;
          const Word left(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
          const Word right(u.begin() + static_cast<std::ptrdiff_t>(pos + len), u.end());
          for (const auto& [rid, term] : it->second) {
            const auto& rule = rules_[rid];
            if (rule.pattern.size() <= best_size) continue;
            if (auto scale = fit(p, rule, left, right)) {
              best = Match{rid, left, right, *scale};
              best_size = rule.pattern.size();
            }
          }
        }
      }
    }
    return best;
  }

  // Largest c with every pattern term of c * left * rule * right present in p
  // with the same sign and at least that magnitude.
  static std::optional<std::int64_t> fit(const Poly& p, const Rule& rule, const Word& left,
                                         const Word& right) {
    std::int64_t scale = 0;
    int sign = 0;
    for (const auto& [w, c] : rule.pattern) {
      const auto x = p.coeff(concat(left, w, right));
      if (x == 0) return std::nullopt;
      const int s = ((x > 0) == (c > 0)) ? 1 : -1;
      if (sign != 0 && s != sign) return std::nullopt;
      sign = s;
      const auto q = (x < 0 ? -x : x) / (c < 0 ? -c : c);
      if (q == 0) return std::nullopt;
      scale = scale == 0 ? q : std::min(scale, q);
    }
    return sign * scale;
  }

  std::vector<Rule> rules_;
  std::map<Word, std::vector<std::pair<std::size_t, std::size_t>>> index_;
  std::set<std::size_t> lengths_;
};

Reducer make_reducer(const QuantumQuiver& q, const LpaPresentation& p) {
  Reducer r;
  for (const auto& rel : p.relations) r.add(std::string(tag_name(rel.tag)), rel.poly);
  if (q.is_commutative()) {
    const auto ne = q.edge_shape().block_count();
    for (std::size_t e = 0; e < ne; ++e) {
      for (std::size_t f = 0; f < ne; ++f) {
        if (e == f) continue;
        r.add("L4x", Poly::monomial({{SymbolKind::SigmaBar, e, 1, 1},
                                     {SymbolKind::Sigma, f, 1, 1}}));
      }
    }
  }
  return r;
}

IdentityReport check(const std::string& name, const SymbolicMatrix& product,
                     const SymbolicMatrix& target, const Reducer& reducer) {
  IdentityReport rep;
  rep.name = name;
  rep.rows = product.rows();
  rep.cols = product.cols();
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      std::set<std::string> tags;
      auto lhs = reducer.reduce(product.at(i, j), tags);
      auto rhs = reducer.reduce(target.at(i, j), tags);
      EntryVerdict v;
      v.row = i;
      v.col = j;
      v.residual = lhs - rhs;
      v.confirmed = v.residual.is_zero();
      v.tags.assign(tags.begin(), tags.end());
      ++(v.confirmed ? rep.confirmed : rep.inconclusive);
      rep.entries.push_back(std::move(v));
    }
  }
  return rep;
}

}  // namespace

SymbolicMatrix multiply(const SymbolicMatrix& x, const SymbolicMatrix& y) {
  if (x.cols() != y.rows()) throw InvalidArgument("matrix dimensions do not agree");
  SymbolicMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const auto& left = x.at(i, k);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        const auto& right = y.at(k, j);
        if (right.is_zero()) continue;
        auto& cell = out.at(i, j);
        cell += left * right;
        guard(cell);
      }
    }
  }
  return out;
}

SymbolicMatrix star(const SymbolicMatrix& m) {
  SymbolicMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Poly p;
      for (const auto& [word, c] : m.at(i, j).terms()) {
        Word w(word.rbegin(), word.rend());
        for (auto& s : w) {
          std::swap(s.row, s.col);
          if (s.kind == SymbolKind::Sigma) {
            s.kind = SymbolKind::SigmaBar;
          } else if (s.kind == SymbolKind::SigmaBar) {
            s.kind = SymbolKind::Sigma;
          }
        }
        p.add(w, c);
      }
      out.at(j, i) = std::move(p);
    }
  }
  return out;
}

std::size_t class_of(const QuantumQuiver& q, std::string_view id) {
  const auto v = q.vertex_shape().index_of(id);
  const auto classes = source_classes(q);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::find(classes[c].begin(), classes[c].end(), v) != classes[c].end()) return c;
  }
  throw UnknownIdError(std::string(id));
}

Witnesses build_witnesses(const QuantumQuiver& q, std::size_t class_index) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  const auto& s = q.source();
  const auto classes = source_classes(q);
  if (class_index >= classes.size()) throw InvalidArgument("source class index out of range");

  Witnesses w;
  w.members = classes[class_index];
  std::vector<std::size_t> edges;
  for (std::size_t a = 0; a < es.block_count(); ++a) {
    for (auto v : w.members) {
      if (s.table().at(v, a) > 0) {
        w.q = std::lcm(w.q, static_cast<std::int64_t>(s.table().at(v, a)));
        if (edges.empty() || edges.back() != a) edges.push_back(a);
      }
    }
  }
  if (edges.empty()) {
    throw InvalidArgument("class of " + vs.id(w.members.front()) +
                          " is a sink class; it has no nontrivial relation");
  }
  const auto q_copies = static_cast<std::size_t>(w.q);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_start;  // (v, copy)
  for (auto v : w.members) {
    for (std::size_t c = 0; c < q_copies; ++c) {
      row_start[{v, c}] = w.row_index.size();
      const auto block = w.row_block_names.size();
      w.row_block_names.push_back(vs.id(v) + "#" + std::to_string(c));
      for (int i = 1; i <= vs.size(v); ++i) {
        w.row_index.emplace_back(v, i);
        w.row_block.push_back(block);
      }
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> col_start;  // (edge, group)
  for (auto a : edges) {
    for (std::size_t g = 0; g < q_copies; ++g) {
      col_start[{a, g}] = w.col_index.size();
      const auto block = w.col_block_names.size();
      w.col_block_names.push_back(es.id(a) + "#" + std::to_string(g));
      for (int j = 1; j <= es.size(a); ++j) {
        w.col_index.emplace_back(a, j);
        w.col_block.push_back(block);
      }
    }
  }

  w.b = SymbolicMatrix(w.row_index.size(), w.col_index.size());
  for (auto v : w.members) {
    for (std::size_t c = 0; c < q_copies; ++c) {
      for (auto a : edges) {
        const auto offs = s.offsets(v, a);
        for (std::size_t k = 0; k < offs.size(); ++k) {
          const auto g = (c + k) % q_copies;
          for (int i = 1; i <= vs.size(v); ++i) {
            for (int j = 1; j <= es.size(a); ++j) {
              const auto r = row_start.at({v, c}) + static_cast<std::size_t>(i - 1);
              const auto col = col_start.at({a, g}) + static_cast<std::size_t>(j - 1);
              w.b.at(r, col) = Poly::symbol({SymbolKind::Sigma, a, offs[k] + i, j});
            }
          }
        }
      }
    }
  }
  w.a = star(w.b);
  return w;
}

WitnessReport verify_identities(const QuantumQuiver& q, std::size_t class_index) {
  WitnessReport report;
  report.class_index = class_index;
  report.witnesses = build_witnesses(q, class_index);
  report.presentation = generate_presentation(q);
  const auto& w = report.witnesses;
  const auto reducer = make_reducer(q, report.presentation);

  const auto ab = multiply(w.a, w.b);
  const auto ba = multiply(w.b, w.a);

  SymbolicMatrix ab_target(ab.rows(), ab.cols());
  for (std::size_t x = 0; x < ab.rows(); ++x) {
    for (std::size_t y = 0; y < ab.cols(); ++y) {
      if (w.col_block[x] != w.col_block[y]) continue;
      const auto [a, j] = w.col_index[x];
      const auto k = w.col_index[y].second;
      if (auto img = range_image(q, {SymbolKind::Sigma, a, j, k})) {
        ab_target.at(x, y) = Poly::symbol(*img);
      }
    }
  }
  SymbolicMatrix ba_target(ba.rows(), ba.cols());
  for (std::size_t x = 0; x < ba.rows(); ++x) {
    for (std::size_t y = 0; y < ba.cols(); ++y) {
      if (w.row_block[x] != w.row_block[y]) continue;
      const auto [v, i] = w.row_index[x];
      ba_target.at(x, y) = Poly::symbol({SymbolKind::Rho, v, i, w.row_index[y].second});
    }
  }

  report.identities.push_back(check("AB", ab, ab_target, reducer));
  report.identities.push_back(check("BA", ba, ba_target, reducer));
  report.identities.push_back(check("ABA", multiply(ab, w.a), w.a, reducer));
  report.identities.push_back(check("BAB", multiply(ba, w.b), w.b, reducer));
  return report;
}

}  // namespace qq
