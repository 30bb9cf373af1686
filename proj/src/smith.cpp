#include "smith.hpp"

#include <cstdlib>
#include <utility>

#include "checked.hpp"

namespace qq::detail {
namespace {

void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) {
    m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
  }
}

void axpy_col(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (auto& row : m) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

Diagonalization diagonalize(IntMatrix d, std::size_t cols) {
  const std::size_t rows = d.size();
  Diagonalization out;
  out.v.assign(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) out.v[i][i] = 1;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const auto x = std::llabs(d[i][j]);
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) return out;
      std::swap(d[t], d[pi]);
      swap_cols(d, t, pj);
      swap_cols(out.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        axpy_row(d, i, t, d[i][t] / d[t][t]);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        const auto q = d[t][j] / d[t][t];
        axpy_col(d, j, t, q);
        axpy_col(out.v, j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    out.diag.push_back(d[t][t]);
  }
  return out;
}

}  // namespace qq::detail
