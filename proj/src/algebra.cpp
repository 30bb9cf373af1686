#include "qq/algebra.hpp"

#include <algorithm>
#include <set>

#include "qq/error.hpp"

namespace qq {

AlgebraShape::AlgebraShape(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<std::string_view> seen;
  first_unit_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (b.id.empty()) throw InvalidArgument("block id must not be empty");
    if (b.size < 1) {
      throw InvalidArgument("block '" + b.id + "' has size " +
                            std::to_string(b.size) + " (must be >= 1)");
    }
    if (!seen.insert(b.id).second) {
      throw InvalidArgument("duplicate block id '" + b.id + "'");
    }
    first_unit_.push_back(dimension_);
    dimension_ += static_cast<std::size_t>(b.size) * static_cast<std::size_t>(b.size);
  }
}

std::optional<std::size_t> AlgebraShape::find(std::string_view id) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t AlgebraShape::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw UnknownIdError(std::string(id));
}

std::int64_t AlgebraShape::unit_trace() const noexcept {
  std::int64_t total = 0;
  for (const auto& b : blocks_) total += b.size;
  return total;
}

bool AlgebraShape::is_commutative() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return b.size == 1; });
}

bool AlgebraShape::contains(const MatrixUnit& unit) const noexcept {
  if (unit.block >= blocks_.size()) return false;
  const int n = blocks_[unit.block].size;
  return unit.row >= 1 && unit.row <= n && unit.col >= 1 && unit.col <= n;
}

std::size_t AlgebraShape::flat_index(const MatrixUnit& unit) const {
  if (!contains(unit)) throw InvalidArgument("matrix unit outside shape");
  const auto n = static_cast<std::size_t>(blocks_[unit.block].size);
  return first_unit_[unit.block] + static_cast<std::size_t>(unit.row - 1) * n +
         static_cast<std::size_t>(unit.col - 1);
}

MatrixUnit AlgebraShape::unit_at(std::size_t flat) const {
  if (flat >= dimension_) throw InvalidArgument("matrix unit index out of range");
  auto it = std::upper_bound(first_unit_.begin(), first_unit_.end(), flat);
  const auto block = static_cast<std::size_t>(it - first_unit_.begin()) - 1;
  const auto n = static_cast<std::size_t>(blocks_[block].size);
  const auto local = flat - first_unit_[block];
  return {block, static_cast<int>(local / n) + 1, static_cast<int>(local % n) + 1};
}

std::vector<MatrixUnit> matrix_units(const AlgebraShape& shape) {
  std::vector<MatrixUnit> units;
  units.reserve(shape.dimension());
  for (std::size_t k = 0; k < shape.block_count(); ++k) {
    const int n = shape.size(k);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) units.push_back({k, i, j});
    }
  }
  return units;
}

IntLinearMap::IntLinearMap(AlgebraShape domain, AlgebraShape codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

void IntLinearMap::set(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows() || col >= cols()) throw InvalidArgument("entry out of range");
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = value;
  }
}

void IntLinearMap::add(std::size_t row, std::size_t col, std::int64_t value) {
  set(row, col, at(row, col) + value);
}

std::int64_t IntLinearMap::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? 0 : it->second;
}

IntLinearMap transpose(const IntLinearMap& map) {
  IntLinearMap out(map.codomain(), map.domain());
  for (const auto& [rc, v] : map.entries()) out.set(rc.second, rc.first, v);
  return out;
}

IntLinearMap identity_map(const AlgebraShape& shape) {
  IntLinearMap out(shape, shape);
  for (std::size_t i = 0; i < shape.dimension(); ++i) out.set(i, i, 1);
  return out;
}

}  // namespace qq
