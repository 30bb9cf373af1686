#pragma once

// Witness matrices for the nontrivial monoid relation of a source class and
// entrywise verification of the four identities by contracting whole
// relation instances.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qq/lpa.hpp"
#include "qq/poly.hpp"
#include "qq/quiver.hpp"

namespace qq {

class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Poly& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

  friend bool operator==(const SymbolicMatrix&, const SymbolicMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

// Throws ResourceError when an entry exceeds the expansion limit.
SymbolicMatrix multiply(const SymbolicMatrix& x, const SymbolicMatrix& y);
// Transpose with sigma <-> sigma-bar and indices swapped.
SymbolicMatrix star(const SymbolicMatrix& m);

/// B has one row per (class vertex w, copy c < q, index i) and one column per
/// (edge alpha fed by the class, group g < q, index j); A = star(B).
struct Witnesses {
  std::vector<std::size_t> members;
  std::int64_t q = 1;
  SymbolicMatrix a;
  SymbolicMatrix b;
  std::vector<std::size_t> row_block;  // rows of B -> vertex-copy block
  std::vector<std::size_t> col_block;  // columns of B -> edge-group block
  std::vector<std::string> row_block_names;  // "v2#0"
  std::vector<std::string> col_block_names;  // "a6#1"
  // Per row of B: (vertex, i); per column: (edge, j).
  std::vector<std::pair<std::size_t, int>> row_index;
  std::vector<std::pair<std::size_t, int>> col_index;
};

// Throws InvalidArgument for a sink class or an index out of range.
Witnesses build_witnesses(const QuantumQuiver& q, std::size_t class_index);

// Index into source_classes() of the class containing vertex `id`.
std::size_t class_of(const QuantumQuiver& q, std::string_view id);

struct EntryVerdict {
  std::size_t row = 0;
  std::size_t col = 0;
  bool confirmed = false;
  std::vector<std::string> tags;  // relation families used, sorted
  Poly residual;                  // reduced(product) - reduced(target)
};

struct IdentityReport {
  std::string name;  // "AB", "BA", "ABA", "BAB"
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t confirmed = 0;
  std::size_t inconclusive = 0;
  std::vector<EntryVerdict> entries;  // row-major
};

struct WitnessReport {
  std::size_t class_index = 0;
  Witnesses witnesses;
  LpaPresentation presentation;
  std::vector<IdentityReport> identities;
};

WitnessReport verify_identities(const QuantumQuiver& q, std::size_t class_index);

}  // namespace qq
