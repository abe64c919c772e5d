#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqtop/scalar.hpp"

namespace bqtop {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define BQTOP_ERROR(Name)                                              \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

BQTOP_ERROR(MalformedQuiver);
BQTOP_ERROR(MalformedRelation);
BQTOP_ERROR(AdmissibilityError);
BQTOP_ERROR(SupportTooLarge);
BQTOP_ERROR(NotConnected);
BQTOP_ERROR(HypothesisViolated);
BQTOP_ERROR(TriangularRequired);
BQTOP_ERROR(NoSemiNormedBasis);
BQTOP_ERROR(FieldMismatch);
BQTOP_ERROR(NotACovering);
BQTOP_ERROR(NotGalois);

#undef BQTOP_ERROR

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Arrow indices composed left to right; a stationary path has no arrows.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool stationary() const { return arrows.empty(); }
  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.arrows == b.arrows;
  }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  }
};

/// Linear combination of parallel paths with exact rational coefficients.
struct RelVector {
  std::size_t source = 0;
  std::size_t target = 0;
  std::map<Path, Rational> terms;

  bool empty() const { return terms.empty(); }
  std::size_t support() const { return terms.size(); }
  friend bool operator==(const RelVector& a, const RelVector& b) {
    return a.source == b.source && a.target == b.target && a.terms == b.terms;
  }
};

class BoundQuiver {
 public:
  BoundQuiver() = default;

  std::size_t add_vertex(const std::string& id);
  std::size_t add_arrow(const std::string& name, const std::string& src, const std::string& dst);
  /// Validates and stores a relation generator.
  void add_relation(RelVector rel);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<RelVector>& relations() const { return relations_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }

  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) != 0; }
  bool has_arrow(const std::string& name) const { return arrow_index_.count(name) != 0; }
  std::size_t vertex(const std::string& id) const;
  std::size_t arrow_index(const std::string& name) const;

  const Field& field() const { return field_; }
  void set_field(Field f) { field_ = f; }

  /// Path from arrow names; throws MalformedRelation when not composable.
  Path path_from_names(const std::vector<std::string>& names) const;
  Path stationary(std::size_t v) const { return Path{v, v, {}}; }
  std::string path_name(const Path& p) const;  // "b*a", or "e_x"

  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;
  bool is_acyclic() const;
  bool is_connected() const;
  /// reach[x][y]: a path of length >= 1 from x to y exists.
  std::vector<std::vector<bool>> reachability() const;
  std::size_t longest_path() const;  // acyclic only

  friend bool operator==(const BoundQuiver& a, const BoundQuiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<RelVector> relations_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
  Field field_;
};

}  // namespace bqtop
