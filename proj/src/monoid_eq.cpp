#include <algorithm>
#include <map>
#include <numeric>

#include "checked.hpp"
#include "qq/error.hpp"
#include "qq/vmonoid.hpp"
#include "smith.hpp"

namespace qq {
namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::int64_t mod(std::int64_t x, std::int64_t k) {
  const auto r = x % k;
  return r < 0 ? r + k : r;
}

std::int64_t dot(const std::vector<std::int64_t>& w, const MonoidElement& x) {
  std::int64_t s = 0;
  for (std::size_t g = 0; g < x.size(); ++g) s = checked_add(s, checked_mul(w[g], x[g]));
  return s;
}

bool respects(const MonoidPresentation& p, const SeparatingMap& f) {
  auto eval = [&](const MonoidElement& x) {
    const auto s = dot(f.weights, x);
    switch (f.kind) {
      case SeparatingMap::Kind::Cyclic: return mod(s, f.modulus);
      case SeparatingMap::Kind::Integer: return s;
      case SeparatingMap::Kind::Truncation: return std::min(s, f.modulus);
    }
    return s;
  };
  for (const auto& r : p.relations) {
    if (eval(r.lhs) != eval(r.rhs)) return false;
  }
  return true;
}

SeparatingMap finish(SeparatingMap f, const MonoidElement& a, const MonoidElement& b) {
  const auto sa = dot(f.weights, a);
  const auto sb = dot(f.weights, b);
  switch (f.kind) {
    case SeparatingMap::Kind::Cyclic:
      f.image_a = mod(sa, f.modulus);
      f.image_b = mod(sb, f.modulus);
      break;
    case SeparatingMap::Kind::Integer:
      f.image_a = sa;
      f.image_b = sb;
      break;
    case SeparatingMap::Kind::Truncation:
      f.image_a = std::min(sa, f.modulus);
      f.image_b = std::min(sb, f.modulus);
      break;
  }
  return f;
}

// Homomorphisms into abelian groups, read off a diagonalization of the
// relation-difference matrix.
std::optional<SeparatingMap> group_certificate(const MonoidPresentation& p,
                                               const MonoidElement& a,
                                               const MonoidElement& b, int max_k) {
  const auto dim = a.size();
  detail::IntMatrix d;
  for (const auto& r : p.relations) {
    std::vector<std::int64_t> row(dim);
    for (std::size_t g = 0; g < dim; ++g) row[g] = checked_sub(r.lhs[g], r.rhs[g]);
    d.push_back(std::move(row));
  }
  const auto diag = detail::diagonalize(d, dim);
  std::vector<std::int64_t> x(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      x[j] = checked_add(x[j], checked_mul(checked_sub(a[i], b[i]), diag.v[i][j]));
    }
  }
  auto column = [&](std::size_t j, std::int64_t scale) {
    std::vector<std::int64_t> w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = checked_mul(diag.v[i][j], scale);
    return w;
  };
  auto s_of = [&](std::size_t j) -> std::int64_t {
    return j < diag.diag.size() ? std::llabs(diag.diag[j]) : 0;
  };

  for (std::int64_t k = 2; k <= max_k; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto step = k / std::gcd(s_of(j), k);
      if (mod(checked_mul(x[j], step), k) == 0) continue;
      SeparatingMap f;
      f.kind = SeparatingMap::Kind::Cyclic;
      f.modulus = k;
      f.weights = column(j, step);
      for (auto& w : f.weights) w = mod(w, k);
      if (respects(p, f)) return finish(std::move(f), a, b);
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    const auto s = s_of(j);
    if (s == 0 && x[j] != 0) {
      SeparatingMap f;
      f.kind = SeparatingMap::Kind::Integer;
      f.weights = column(j, 1);
      if (respects(p, f)) return finish(std::move(f), a, b);
    } else if (s > 1 && mod(x[j], s) != 0) {
      SeparatingMap f;
      f.kind = SeparatingMap::Kind::Cyclic;
      f.modulus = s;
      f.weights = column(j, 1);
      for (auto& w : f.weights) w = mod(w, s);
      if (respects(p, f)) return finish(std::move(f), a, b);
    }
  }
  return std::nullopt;
}

std::optional<SeparatingMap> truncation_certificate(const MonoidPresentation& p,
                                                    const MonoidElement& a,
                                                    const MonoidElement& b, int max_m,
                                                    std::size_t budget) {
  const auto dim = a.size();
  std::size_t spent = 0;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    SeparatingMap f;
    f.kind = SeparatingMap::Kind::Truncation;
    f.modulus = m;
    f.weights.assign(dim, 0);
    while (true) {
      if (++spent > budget) return std::nullopt;
      auto done = finish(f, a, b);
      if (done.image_a != done.image_b && respects(p, f)) return done;
      std::size_t g = dim;
      while (g > 0 && f.weights[g - 1] == m) f.weights[--g] = 0;
      if (g == 0) break;
      ++f.weights[g - 1];
    }
  }
  return std::nullopt;
}

struct Side {
  std::map<MonoidElement, MonoidElement> parent;  // root maps to itself
  std::vector<MonoidElement> frontier;
};

std::vector<MonoidElement> trace(const Side& side, MonoidElement x) {
  std::vector<MonoidElement> out{x};
  while (true) {
    const auto& up = side.parent.at(x);
    if (up == x) break;
    x = up;
    out.push_back(x);
  }
  return out;
}

class Search {
 public:
  Search(const MonoidPresentation& p, std::int64_t bound, std::size_t budget)
      : bound_(bound), budget_(budget) {
    for (const auto& r : p.relations) {
      if (r.lhs == r.rhs) continue;
      moves_.emplace_back(r.lhs, r.rhs);
      moves_.emplace_back(r.rhs, r.lhs);
    }
  }

  // Expands one level; returns a state also reached by `other`, if any.
  std::optional<MonoidElement> expand(Side& side, const Side& other) {
    std::vector<MonoidElement> next;
    std::optional<MonoidElement> meet;
    for (const auto& x : side.frontier) {
      for (const auto& [from, to] : moves_) {
        for (std::int64_t t = 1;; ++t) {
          MonoidElement y(x.size());
          bool ok = true;
          for (std::size_t g = 0; g < x.size() && ok; ++g) {
            y[g] = checked_add(checked_sub(x[g], checked_mul(t, from[g])),
                               checked_mul(t, to[g]));
            if (y[g] < 0 || y[g] > bound_) ok = false;
          }
          if (!ok) break;
          if (!side.parent.emplace(y, x).second) continue;
          if (++states_ > budget_) {
            exhausted_ = true;
            return meet;
          }
          if (!meet && other.parent.contains(y)) meet = y;
          next.push_back(std::move(y));
        }
      }
    }
    side.frontier = std::move(next);
    return meet;
  }

  bool exhausted() const noexcept { return exhausted_; }

 private:
  std::int64_t bound_;
  std::size_t budget_;
  std::size_t states_ = 0;
  bool exhausted_ = false;
  std::vector<std::pair<MonoidElement, MonoidElement>> moves_;
};

}  // namespace

MonoidEqResult monoid_eq(const MonoidPresentation& p, const MonoidElement& a,
                         const MonoidElement& b, const MonoidEqOptions& options) {
  const auto dim = p.generators.size();
  if (a.size() != dim || b.size() != dim) {
    throw InvalidArgument("element has " + std::to_string(a.size() != dim ? a.size() : b.size()) +
                          " coordinates but the presentation has " + std::to_string(dim) +
                          " generators");
  }
  auto nonneg = [](const MonoidElement& x) {
    return std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c >= 0; });
  };
  if (!nonneg(a) || !nonneg(b)) throw InvalidArgument("monoid elements must be nonnegative");
  if (options.depth < 0) throw InvalidArgument("depth must be nonnegative");

  MonoidEqResult result;
  if (a == b) {
    result.verdict = MonoidVerdict::Equal;
    result.path = {a};
    return result;
  }

  if (auto f = group_certificate(p, a, b, options.max_k)) {
    result.verdict = MonoidVerdict::NotEqual;
    result.certificate = std::move(f);
    return result;
  }

  std::int64_t top = 1;
  for (auto c : a) top = std::max(top, c);
  for (auto c : b) top = std::max(top, c);
  for (const auto& r : p.relations) {
    for (auto c : r.lhs) top = std::max(top, c);
    for (auto c : r.rhs) top = std::max(top, c);
  }
  Search search(p, checked_mul(top, std::max(1, options.depth)), options.state_budget);
  Side from_a, from_b;
  from_a.parent.emplace(a, a);
  from_a.frontier = {a};
  from_b.parent.emplace(b, b);
  from_b.frontier = {b};
  for (int level = 1; level <= options.depth && !search.exhausted(); ++level) {
    auto meet = search.expand(from_a, from_b);
    if (!meet && !search.exhausted()) meet = search.expand(from_b, from_a);
    if (meet) {
      auto left = trace(from_a, *meet);
      std::reverse(left.begin(), left.end());
      auto right = trace(from_b, *meet);
      left.insert(left.end(), right.begin() + 1, right.end());
      result.verdict = MonoidVerdict::Equal;
      result.depth = level;
      result.path = std::move(left);
      return result;
    }
  }

  if (auto f = truncation_certificate(p, a, b, options.max_m, options.truncation_budget)) {
    result.verdict = MonoidVerdict::NotEqual;
    result.certificate = std::move(f);
  }
  return result;
}

}  // namespace qq
