#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "bqtop/covering.hpp"
#include "bqtop/quiver.hpp"

namespace bqtop {

/// Syntax error with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads the .bq text format:
///
///   # comment
///   field Fp:3          (optional, default Q)
///   vertex x
///   arrow a x y
///   rel 2*a*b - 1/2*c*d + e*f
///
/// Semantic errors keep their own kind and get a "line:col: " prefix.
BoundQuiver parse_quiver(std::string_view text);
std::string serialize(const BoundQuiver& q);
/// "b*a - 2*g*a"
std::string relation_string(const BoundQuiver& q, const RelVector& rel);

/// `vmap v -> w` and `amap a -> b` lines; every vertex and arrow of `from`
/// has to be mapped.
QuiverMorphism parse_morphism(std::string_view text, const BoundQuiver& from,
                              const BoundQuiver& to);

/// `element NAME` opens a block of vmap/amap lines on `cover`; anything not
/// listed is fixed.
GroupAction parse_group(std::string_view text, const BoundQuiver& cover);

std::string read_file(const std::string& path);

}  // namespace bqtop
