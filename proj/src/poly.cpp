#include "qq/poly.hpp"

#include <algorithm>
#include <numeric>

#include "checked.hpp"

namespace qq {

using detail::checked_add;
using detail::checked_mul;

bool WordOrder::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word concat(const Word& left, const Word& middle, const Word& right) {
  Word out;
  out.reserve(left.size() + middle.size() + right.size());
  out.insert(out.end(), left.begin(), left.end());
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

Poly Poly::unit(std::int64_t coeff) { return monomial({}, coeff); }

Poly Poly::symbol(const GeneratorSymbol& s, std::int64_t coeff) {
  return monomial({s}, coeff);
}

Poly Poly::monomial(Word word, std::int64_t coeff) {
  Poly p;
  p.add(word, coeff);
  return p;
}

void Poly::add(const Word& word, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(word, coeff);
    return;
  }
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void Poly::add(const Poly& other, std::int64_t scale) {
  for (const auto& [w, c] : other.terms_) add(w, checked_mul(c, scale));
}

std::int64_t Poly::coeff(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? 0 : it->second;
}

std::size_t Poly::max_length() const noexcept {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

Poly& Poly::operator+=(const Poly& other) {
  add(other, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  add(other, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      out.add(concat(wa, wb, {}), checked_mul(ca, cb));
    }
  }
  return out;
}

Poly canonical(const Poly& p) {
  if (p.is_zero()) return p;
  std::int64_t g = 0;
  for (const auto& [w, c] : p.terms()) g = std::gcd(g, c);
  if (p.terms().begin()->second < 0) g = -g;
  Poly out;
  for (const auto& [w, c] : p.terms()) out.add(w, c / g);
  return out;
}

}  // namespace qq
