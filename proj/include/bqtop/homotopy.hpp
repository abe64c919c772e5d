#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bqtop/path_table.hpp"
#include "bqtop/presentation.hpp"

namespace bqtop {

struct MinimalRelation {
  RelVector vec;
  std::vector<std::size_t> support;  // path ids, ascending
};

struct MinimalRelationSet {
  std::vector<MinimalRelation> relations;
  std::size_t support_cap = 8;
  bool possibly_incomplete = false;
  std::vector<std::string> warnings;
};

/// Literal definition check; exponential in the support size.
bool is_minimal_relation(const PathTable& pt, const RelVector& v, std::size_t cap = 12);

/// One minimal relation per support set that admits one, supports up to support_cap.
MinimalRelationSet minimal_relation_supports(const PathTable& pt, std::size_t support_cap = 8);

enum class HomotopyVariant { natural, walk };

struct PathClass {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> members;  // path ids, ascending
  std::size_t representative = 0;
  bool nonzero = false;
  bool identity = false;  // class of a stationary path
};

struct PathClassTable {
  HomotopyVariant variant = HomotopyVariant::natural;
  std::vector<std::size_t> class_of;  // path id -> class id
  std::vector<PathClass> classes;     // ordered by representative
  std::size_t depth_bound = 0;
  bool caveat = false;     // walk search hit its bound somewhere
  bool truncated = false;  // closure may miss merges through paths longer than L

  std::size_t size() const { return classes.size(); }
  bool same(std::size_t p, std::size_t q) const { return class_of.at(p) == class_of.at(q); }
};

PathClassTable natural_homotopy_classes(const PathTable& pt, const MinimalRelationSet& mrs);

struct WalkOptions {
  std::size_t depth_bound = 0;  // 0 means 2L + 4
  std::size_t state_cap = 100000;
};

PathClassTable walk_homotopy_classes(const PathTable& pt, const MinimalRelationSet& mrs,
                                     const PathClassTable& natural, WalkOptions opts = {});
PathClassTable walk_homotopy_classes(const PathTable& pt, const MinimalRelationSet& mrs,
                                     WalkOptions opts = {});

/// Generators are the arrows; relators are the tree arrows and w1 wj^-1 per minimal relation.
GroupPresentation pi1_presentation(const PathTable& pt, const MinimalRelationSet& mrs,
                                   std::size_t base_vertex = 0);

/// Word of a path in the arrow generators.
Word path_word(const PathTable& pt, std::size_t path_id);

struct VanKampenResult {
  std::vector<std::size_t> v1;
  std::vector<std::size_t> v2;
  std::vector<std::size_t> v0;
  GroupPresentation q1;
  GroupPresentation q2;
  GroupPresentation q0;
  GroupPresentation pushout;
};

VanKampenResult van_kampen_pushout(const PathTable& pt, const MinimalRelationSet& mrs,
                                   const std::vector<std::size_t>& v1,
                                   const std::vector<std::size_t>& v2);

}  // namespace bqtop
