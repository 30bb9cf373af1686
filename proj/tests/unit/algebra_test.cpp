#include <doctest.h>

#include "qq/algebra.hpp"
#include "qq/error.hpp"

using namespace qq;

TEST_CASE("shape dimension counts matrix units") {
  AlgebraShape s({{"a", 1}, {"b", 3}, {"c", 2}});
  CHECK(s.dimension() == 14);
  CHECK(matrix_units(s).size() == 14);
  CHECK(s.unit_trace() == 6);
  CHECK_FALSE(s.is_commutative());
  CHECK(AlgebraShape({{"x", 1}, {"y", 1}}).is_commutative());
  CHECK(AlgebraShape().dimension() == 0);
}

TEST_CASE("flat index and unit_at are inverse") {
  AlgebraShape s({{"a", 2}, {"b", 3}});
  const auto units = matrix_units(s);
  for (std::size_t i = 0; i < units.size(); ++i) {
    CHECK(s.flat_index(units[i]) == i);
    CHECK(s.unit_at(i) == units[i]);
  }
  CHECK(units[4] == MatrixUnit{1, 1, 1});
  CHECK_FALSE(s.contains({0, 3, 1}));
  CHECK_FALSE(s.contains({2, 1, 1}));
}

TEST_CASE("shape rejects duplicates and empty blocks") {
  CHECK_THROWS_AS(AlgebraShape({{"a", 1}, {"a", 2}}), InvalidArgument);
  CHECK_THROWS_AS(AlgebraShape({{"a", 0}}), InvalidArgument);
  AlgebraShape s({{"a", 1}});
  CHECK_THROWS_AS(s.index_of("zz"), UnknownIdError);
  CHECK(s.find("a") == std::optional<std::size_t>(0));
}

TEST_CASE("transpose swaps domain and codomain") {
  AlgebraShape d({{"a", 1}}), c({{"b", 2}});
  IntLinearMap m(d, c);
  m.set(3, 0, 5);
  const auto t = transpose(m);
  CHECK(t.domain() == c);
  CHECK(t.codomain() == d);
  CHECK(t.at(0, 3) == 5);
  CHECK(transpose(t) == m);
  CHECK(identity_map(c).entries().size() == 4);
}
