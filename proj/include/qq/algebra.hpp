#pragma once

// Finite-dimensional C*-algebras as ordered lists of matrix blocks, their
// matrix-unit bases, and exact integer maps between those bases.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qq {

struct Block {
  std::string id;
  int size = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

// e^k_{ij}: `block` indexes into the owning AlgebraShape, row/col are 1-based.
struct MatrixUnit {
  std::size_t block = 0;
  int row = 1;
  int col = 1;

  friend auto operator<=>(const MatrixUnit&, const MatrixUnit&) = default;
};

/// Product of full matrix algebras M_{n_1} x ... x M_{n_k}, in list order.
///
/// Block ids are unique and match [A-Za-z0-9_]+ when they come from files;
/// the constructor only enforces uniqueness and size >= 1. The empty list is
/// the zero algebra.
class AlgebraShape {
 public:
  AlgebraShape() = default;
  explicit AlgebraShape(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const Block& block(std::size_t index) const { return blocks_.at(index); }
  int size(std::size_t index) const { return blocks_.at(index).size; }
  const std::string& id(std::size_t index) const { return blocks_.at(index).id; }

  std::optional<std::size_t> find(std::string_view id) const;
  // Throws UnknownIdError.
  std::size_t index_of(std::string_view id) const;

  /// Sum of size^2, i.e. the number of matrix units.
  std::size_t dimension() const noexcept { return dimension_; }
  /// Sum of sizes, the trace of the unit.
  std::int64_t unit_trace() const noexcept;
  bool is_commutative() const noexcept;

  bool contains(const MatrixUnit& unit) const noexcept;
  /// Position of `unit` in matrix_units() order.
  std::size_t flat_index(const MatrixUnit& unit) const;
  MatrixUnit unit_at(std::size_t flat) const;

  friend bool operator==(const AlgebraShape& a, const AlgebraShape& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> first_unit_;
  std::size_t dimension_ = 0;
};

/// Blocks in list order, then row-major within each block.
std::vector<MatrixUnit> matrix_units(const AlgebraShape& shape);

/// Sparse integer matrix of a linear map in the matrix-unit bases, indexed by
/// (codomain flat index, domain flat index).
class IntLinearMap {
 public:
  IntLinearMap(AlgebraShape domain, AlgebraShape codomain);

  const AlgebraShape& domain() const noexcept { return domain_; }
  const AlgebraShape& codomain() const noexcept { return codomain_; }

  void set(std::size_t row, std::size_t col, std::int64_t value);
  void add(std::size_t row, std::size_t col, std::int64_t value);
  std::int64_t at(std::size_t row, std::size_t col) const;
  std::size_t rows() const noexcept { return codomain_.dimension(); }
  std::size_t cols() const noexcept { return domain_.dimension(); }

  const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& entries()
      const noexcept {
    return entries_;
  }

  friend bool operator==(const IntLinearMap&, const IntLinearMap&) = default;

 private:
  AlgebraShape domain_;
  AlgebraShape codomain_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> entries_;
};

IntLinearMap transpose(const IntLinearMap& map);

IntLinearMap identity_map(const AlgebraShape& shape);

}  // namespace qq
