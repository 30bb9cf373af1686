#pragma once

// Unital *-homomorphisms between block algebras, described combinatorially:
// the multiplicity table order(t, v, alpha) and a regular (diagonal, block
// copy) embedding realizing it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qq/algebra.hpp"

namespace qq {

/// order(t, v, alpha) for every vertex block v of `domain` and edge block
/// alpha of `codomain`. Absent entries are 0.
class OrderTable {
 public:
  OrderTable() = default;
  OrderTable(AlgebraShape domain, AlgebraShape codomain);

  const AlgebraShape& domain() const noexcept { return domain_; }
  const AlgebraShape& codomain() const noexcept { return codomain_; }

  int at(std::size_t vertex, std::size_t edge) const;
  void set(std::size_t vertex, std::size_t edge, int order);
  // Id-based accessors; throw UnknownIdError.
  int at(std::string_view vertex, std::string_view edge) const;
  void set(std::string_view vertex, std::string_view edge, int order);

  /// sum_v n_v * order(v, edge), the left side of the unitality identity.
  std::int64_t column_weight(std::size_t edge) const;

  friend bool operator==(const OrderTable&, const OrderTable&) = default;

 private:
  AlgebraShape domain_;
  AlgebraShape codomain_;
  std::vector<int> entries_;  // vertex-major
};

struct UnitalityViolation {
  std::size_t edge = 0;
  std::int64_t weighted_sum = 0;  // sum_v n_v * order(v, edge)
  int edge_size = 0;              // m_edge
};

struct TableValidation {
  std::vector<UnitalityViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string describe(const OrderTable& table) const;
};

TableValidation validate(const OrderTable& table);

/// A regular embedding: for each (v, alpha), the 0-based diagonal offsets of
/// the order(v, alpha) copies of M_{n_v} inside M_{m_alpha}. Copies in each
/// edge block tile [0, m_alpha) exactly.
class RegularEmbedding {
 public:
  RegularEmbedding() = default;
  // Throws ValidationError if the offsets do not realize `table` or the copies
  // overlap / leave gaps.
  RegularEmbedding(OrderTable table, std::vector<std::vector<int>> offsets);

  const OrderTable& table() const noexcept { return table_; }
  const AlgebraShape& domain() const noexcept { return table_.domain(); }
  const AlgebraShape& codomain() const noexcept { return table_.codomain(); }

  std::span<const int> offsets(std::size_t vertex, std::size_t edge) const;

  // The copy covering diagonal position `pos` (0-based) of edge block `edge`.
  struct Slot {
    std::size_t vertex;
    int offset;
  };
  const Slot& slot(std::size_t edge, int pos) const;

  friend bool operator==(const RegularEmbedding& a, const RegularEmbedding& b) {
    return a.table_ == b.table_ && a.offsets_ == b.offsets_;
  }

 private:
  OrderTable table_;
  std::vector<std::vector<int>> offsets_;  // [vertex * edges + edge], sorted
  std::vector<std::vector<Slot>> layout_;  // [edge][diagonal position]
};

/// Consecutive copies per vertex, vertices in shape order, per edge block.
RegularEmbedding canonical_embedding(const OrderTable& table);

/// T(v,i,j) = {(alpha, o+i, o+j) : o in offsets(v, alpha)}, sorted.
std::vector<MatrixUnit> coordinate_map(const RegularEmbedding& emb,
                                       const MatrixUnit& unit);

/// The unique domain unit whose image contains `unit`, or nullopt (zero).
std::optional<MatrixUnit> adjoint_unit(const RegularEmbedding& emb,
                                       const MatrixUnit& unit);

/// 0/1 matrix of the embedding on matrix units.
IntLinearMap to_linear_map(const RegularEmbedding& emb);

}  // namespace qq
