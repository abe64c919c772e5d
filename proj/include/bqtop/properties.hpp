#pragma once

#include <cstddef>
#include <vector>

#include "bqtop/path_table.hpp"

namespace bqtop {

struct AlgebraProperties {
  bool admissible = true;
  bool connected = false;
  bool triangular = false;
  bool almost_triangular = false;
  bool schurian = false;
  bool semi_commutative = false;
  bool constricted = false;
  bool monomial = false;
  std::size_t nilpotency_bound = 0;
  long euler_characteristic = 0;  // 1 - |Q0| + |Q1|
  std::size_t dimension = 0;
  std::vector<std::vector<std::size_t>> dims;  // dims[x][y] = dim e_x A e_y
};

AlgebraProperties algebra_properties(const PathTable& pt);

}  // namespace bqtop
