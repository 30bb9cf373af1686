#pragma once

// Integer linear combinations of words in the rho / sigma / sigma-bar
// generators. The empty word is the unit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace qq {

enum class SymbolKind : std::uint8_t { Rho, Sigma, SigmaBar };

// `block` indexes the vertex shape for Rho and the edge shape otherwise.
struct GeneratorSymbol {
  SymbolKind kind = SymbolKind::Rho;
  std::size_t block = 0;
  int row = 1;
  int col = 1;

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

using Word = std::vector<GeneratorSymbol>;

// Shorter words first, then symbol by symbol.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};

Word concat(const Word& left, const Word& middle, const Word& right);

class Poly {
 public:
  using Terms = std::map<Word, std::int64_t, WordOrder>;

  Poly() = default;
  static Poly unit(std::int64_t coeff = 1);
  static Poly symbol(const GeneratorSymbol& s, std::int64_t coeff = 1);
  static Poly monomial(Word word, std::int64_t coeff = 1);

  // Arithmetic throws ResourceError on int64 overflow.
  void add(const Word& word, std::int64_t coeff);
  void add(const Poly& other, std::int64_t scale = 1);

  std::int64_t coeff(const Word& word) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t max_length() const noexcept;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

/// Same relation up to a nonzero scalar: divides by the content and makes the
/// first term positive.
Poly canonical(const Poly& p);

}  // namespace qq
