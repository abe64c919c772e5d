#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bqtop/complex.hpp"

namespace bqtop {

/// Vertex and arrow maps from a source quiver to a target quiver.
struct QuiverMorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> arrow_map;

  friend bool operator==(const QuiverMorphism& a, const QuiverMorphism& b) {
    return a.vertex_map == b.vertex_map && a.arrow_map == b.arrow_map;
  }
};

/// Extensional group of automorphisms of a cover quiver.
struct GroupAction {
  std::vector<std::string> names;
  std::vector<QuiverMorphism> elements;
};

/// Image of a path id of `from` under m as a path id of `to` (kNoPath past L).
std::size_t map_path(const PathTable& from, const PathTable& to, const QuiverMorphism& m,
                     std::size_t id);

struct CoveringReport {
  bool well_formed = true;
  bool fibers_nonempty = true;    // condition 1
  bool local_bijections = true;   // condition 2
  bool ideal_preserved = true;    // p maps the cover ideal into the base ideal
  bool relations_lift = true;     // condition 3, includes ideal_preserved
  bool covering = false;
  std::vector<std::size_t> fiber_sizes;  // per base vertex
  std::size_t lifts_checked = 0;

  bool galois_checked = false;
  std::size_t group_order = 0;
  bool group_axioms = true;
  bool group_preserves_ideal = true;
  bool commutes_with_p = true;     // condition 4
  bool transitive_vertices = true; // condition 5
  bool transitive_arrows = true;
  bool fixed_point_free = true;    // condition 6
  bool galois = false;

  std::vector<std::string> witnesses;
};

CoveringReport check_covering(const PathTable& base, const PathTable& cover,
                              const QuiverMorphism& p);
CoveringReport check_galois(const PathTable& base, const PathTable& cover, const QuiverMorphism& p,
                            const GroupAction& g);

/// Everything needed to talk about a complex of one bound quiver.
struct ComplexData {
  const PathTable* table = nullptr;
  const PathClassTable* classes = nullptr;
  const CellComplex* complex = nullptr;
};

struct CellMapReport {
  std::vector<std::vector<std::size_t>> map;  // cover cell -> base cell, per dimension
  bool classes_compatible = true;  // p respects classes and is injective per source vertex
  bool faces_commute = true;
  bool local_bijection = true;  // pointed incidences at x^ versus p(x^)
  std::vector<std::vector<std::size_t>> fiber_sizes;  // per dimension, per base cell
  std::vector<std::string> witnesses;

  bool ok() const { return classes_compatible && faces_commute && local_bijection; }
  /// Common fiber size in every dimension, if there is one.
  std::optional<std::size_t> uniform_fiber() const;
};

CellMapReport lift_complex_map(const ComplexData& base, const ComplexData& cover,
                               const QuiverMorphism& p);

struct DeckReport {
  std::size_t order = 0;
  std::vector<std::vector<std::vector<std::size_t>>> maps;  // per element, dimension, cell
  bool automorphisms = true;
  bool compatible = true;  // Bp . Bg = Bp
  bool distinct = true;
  bool transitive = true;  // on the 0-cell fiber over the first base vertex
  std::vector<std::size_t> base_fiber;
  std::vector<std::string> witnesses;

  bool ok() const { return automorphisms && compatible && distinct && transitive; }
};

DeckReport deck_group(const ComplexData& base, const ComplexData& cover, const QuiverMorphism& p,
                      const GroupAction& g);

/// Z/n voltage cover: vertices (v,i), arrows (a,i): (s,i) -> (t,i+volt(a)),
/// every base relation lifted at every level. Returns nullopt when some
/// relation has terms of different total voltage.
struct VoltageCover {
  BoundQuiver cover;
  QuiverMorphism projection;
  GroupAction rotations;
};
std::optional<VoltageCover> voltage_cover(const BoundQuiver& base, std::size_t n,
                                          const std::vector<std::size_t>& voltage);

}  // namespace bqtop
