#include "bqtop/properties.hpp"

#include <algorithm>

namespace bqtop {

AlgebraProperties algebra_properties(const PathTable& pt) {
  const BoundQuiver& q = pt.quiver();
  std::size_t n = q.vertex_count();
  AlgebraProperties a;
  // least m with F^m inside I
  for (std::size_t id = 0; id < pt.size(); ++id)
    if (pt.nonzero(id)) a.nilpotency_bound = std::max(a.nilpotency_bound, pt.path(id).length() + 1);
  a.connected = q.is_connected();
  a.triangular = q.is_acyclic();
  a.euler_characteristic =
      1 - static_cast<long>(n) + static_cast<long>(q.arrow_count());
  a.dims.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      a.dims[x][y] = pt.dim(x, y);
      a.dimension += a.dims[x][y];
    }

  a.schurian = true;
  a.almost_triangular = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (a.dims[x][y] > 1) a.schurian = false;
      std::size_t rad_xy = x == y ? a.dims[x][x] - 1 : a.dims[x][y];
      std::size_t rad_yx = x == y ? rad_xy : a.dims[y][x];
      if (rad_xy != 0 && rad_yx != 0) a.almost_triangular = false;
    }

  auto reach = q.reachability();
  std::vector<bool> on_cycle(n, false);
  for (std::size_t v = 0; v < n; ++v) on_cycle[v] = reach[v][v];
  a.semi_commutative = true;
  for (std::size_t x = 0; x < n && a.semi_commutative; ++x)
    for (std::size_t y = 0; y < n && a.semi_commutative; ++y) {
      bool unbounded = false;
      for (std::size_t z = 0; z < n; ++z)
        if (on_cycle[z] && (z == x || reach[x][z]) && (z == y || reach[z][y])) unbounded = true;
      bool any_zero = unbounded;
      bool any_nonzero = false;
      for (std::size_t id : pt.between(x, y)) {
        if (pt.nonzero(id))
          any_nonzero = true;
        else
          any_zero = true;
      }
      if (any_zero && any_nonzero) a.semi_commutative = false;
    }

  a.constricted = true;
  for (const auto& arrow : q.arrows())
    if (a.dims[arrow.source][arrow.target] != 1) a.constricted = false;

  a.monomial = true;
  for (std::size_t x = 0; x < n && a.monomial; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t zero_paths = 0;
      for (std::size_t id : pt.between(x, y))
        if (pt.in_ideal(id)) ++zero_paths;
      if (zero_paths != pt.ideal_rank(x, y)) {
        a.monomial = false;
        break;
      }
    }
  return a;
}

}  // namespace bqtop
