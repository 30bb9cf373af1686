#include "qq/hom.hpp"

#include <algorithm>
#include <sstream>

#include "qq/error.hpp"

namespace qq {

OrderTable::OrderTable(AlgebraShape domain, AlgebraShape codomain)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(domain_.block_count() * codomain_.block_count(), 0) {}

int OrderTable::at(std::size_t vertex, std::size_t edge) const {
  if (vertex >= domain_.block_count() || edge >= codomain_.block_count()) {
    throw InvalidArgument("order table index out of range");
  }
  return entries_[vertex * codomain_.block_count() + edge];
}

void OrderTable::set(std::size_t vertex, std::size_t edge, int order) {
  if (vertex >= domain_.block_count() || edge >= codomain_.block_count()) {
    throw InvalidArgument("order table index out of range");
  }
  if (order < 0) throw InvalidArgument("orders must be nonnegative");
  entries_[vertex * codomain_.block_count() + edge] = order;
}

int OrderTable::at(std::string_view vertex, std::string_view edge) const {
  return at(domain_.index_of(vertex), codomain_.index_of(edge));
}

void OrderTable::set(std::string_view vertex, std::string_view edge, int order) {
  set(domain_.index_of(vertex), codomain_.index_of(edge), order);
}

std::int64_t OrderTable::column_weight(std::size_t edge) const {
  std::int64_t sum = 0;
  for (std::size_t v = 0; v < domain_.block_count(); ++v) {
    sum += static_cast<std::int64_t>(domain_.size(v)) * at(v, edge);
  }
  return sum;
}

std::string TableValidation::describe(const OrderTable& table) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) out << "; ";
    first = false;
    out << "edge " << table.codomain().id(v.edge) << ": " << v.weighted_sum
        << " ≠ " << v.edge_size;
  }
  return out.str();
}

TableValidation validate(const OrderTable& table) {
  TableValidation result;
  for (std::size_t a = 0; a < table.codomain().block_count(); ++a) {
    const auto sum = table.column_weight(a);
    const int m = table.codomain().size(a);
    if (sum != m) result.violations.push_back({a, sum, m});
  }
  return result;
}

RegularEmbedding::RegularEmbedding(OrderTable table,
                                   std::vector<std::vector<int>> offsets)
    : table_(std::move(table)), offsets_(std::move(offsets)) {
  const auto& dom = table_.domain();
  const auto& cod = table_.codomain();
  const std::size_t nv = dom.block_count();
  const std::size_t ne = cod.block_count();
  if (offsets_.size() != nv * ne) {
    throw ValidationError("embedding offset table has wrong dimensions");
  }
  if (auto check = validate(table_); !check.ok()) {
    throw ValidationError("unitality violated: " + check.describe(table_));
  }
  layout_.assign(ne, {});
  for (std::size_t a = 0; a < ne; ++a) {
    const int m = cod.size(a);
    std::vector<int> owner(static_cast<std::size_t>(m), -1);
    layout_[a].assign(static_cast<std::size_t>(m), Slot{0, 0});
    for (std::size_t v = 0; v < nv; ++v) {
      auto& list = offsets_[v * ne + a];
      const int n = dom.size(v);
      if (static_cast<int>(list.size()) != table_.at(v, a)) {
        throw ValidationError("vertex " + dom.id(v) + " in edge " + cod.id(a) +
                              ": " + std::to_string(list.size()) +
                              " offsets given but order is " +
                              std::to_string(table_.at(v, a)));
      }
      std::sort(list.begin(), list.end());
      for (int o : list) {
        if (o < 0 || o + n > m) {
          throw ValidationError("vertex " + dom.id(v) + " in edge " + cod.id(a) +
                                ": copy at offset " + std::to_string(o) +
                                " does not fit in size " + std::to_string(m));
        }
        for (int p = o; p < o + n; ++p) {
          auto& cell = owner[static_cast<std::size_t>(p)];
          if (cell != -1) {
            throw ValidationError("edge " + cod.id(a) + ": copies overlap at position " +
                                  std::to_string(p));
          }
          cell = static_cast<int>(v);
          layout_[a][static_cast<std::size_t>(p)] = Slot{v, o};
        }
      }
    }
    for (int p = 0; p < m; ++p) {
      if (owner[static_cast<std::size_t>(p)] == -1) {
        throw ValidationError("edge " + cod.id(a) + ": diagonal position " +
                              std::to_string(p) + " is not covered");
      }
    }
  }
}

std::span<const int> RegularEmbedding::offsets(std::size_t vertex,
                                               std::size_t edge) const {
  const std::size_t ne = codomain().block_count();
  if (vertex >= domain().block_count() || edge >= ne) {
    throw InvalidArgument("embedding index out of range");
  }
  return offsets_[vertex * ne + edge];
}

const RegularEmbedding::Slot& RegularEmbedding::slot(std::size_t edge, int pos) const {
  return layout_.at(edge).at(static_cast<std::size_t>(pos));
}

RegularEmbedding canonical_embedding(const OrderTable& table) {
  if (auto check = validate(table); !check.ok()) {
    throw ValidationError("unitality violated: " + check.describe(table));
  }
  const std::size_t nv = table.domain().block_count();
  const std::size_t ne = table.codomain().block_count();
  std::vector<std::vector<int>> offsets(nv * ne);
  for (std::size_t a = 0; a < ne; ++a) {
    int cursor = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      const int n = table.domain().size(v);
      for (int c = 0; c < table.at(v, a); ++c) {
        offsets[v * ne + a].push_back(cursor);
        cursor += n;
      }
    }
  }
  return RegularEmbedding(table, std::move(offsets));
}

std::vector<MatrixUnit> coordinate_map(const RegularEmbedding& emb,
                                       const MatrixUnit& unit) {
  if (!emb.domain().contains(unit)) {
    throw InvalidArgument("matrix unit does not belong to the domain");
  }
  std::vector<MatrixUnit> image;
  for (std::size_t a = 0; a < emb.codomain().block_count(); ++a) {
    for (int o : emb.offsets(unit.block, a)) {
      image.push_back({a, o + unit.row, o + unit.col});
    }
  }
  return image;
}

std::optional<MatrixUnit> adjoint_unit(const RegularEmbedding& emb,
                                       const MatrixUnit& unit) {
  if (!emb.codomain().contains(unit)) {
    throw InvalidArgument("matrix unit does not belong to the codomain");
  }
  const auto& row_slot = emb.slot(unit.block, unit.row - 1);
  const auto& col_slot = emb.slot(unit.block, unit.col - 1);
  if (row_slot.vertex != col_slot.vertex || row_slot.offset != col_slot.offset) {
    return std::nullopt;
  }
  return MatrixUnit{row_slot.vertex, unit.row - row_slot.offset,
                    unit.col - row_slot.offset};
}

IntLinearMap to_linear_map(const RegularEmbedding& emb) {
  IntLinearMap map(emb.domain(), emb.codomain());
  for (const auto& u : matrix_units(emb.domain())) {
    const auto col = emb.domain().flat_index(u);
    for (const auto& image : coordinate_map(emb, u)) {
      map.set(emb.codomain().flat_index(image), col, 1);
    }
  }
  return map;
}

}  // namespace qq
