#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qq::detail {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// U * D * V = diag(d_0, ..., d_{rank-1}, 0, ...) with U, V unimodular. Only V
// is kept; the diagonal need not form a divisibility chain.
struct Diagonalization {
  IntMatrix v;  // cols x cols
  std::vector<std::int64_t> diag;  // length rank, all nonzero
};

Diagonalization diagonalize(IntMatrix d, std::size_t cols);

}  // namespace qq::detail
