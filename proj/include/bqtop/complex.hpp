#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bqtop/chain.hpp"
#include "bqtop/homotopy.hpp"

namespace bqtop {

struct Cell {
  std::vector<std::size_t> classes;  // empty for a 0-cell
  std::size_t vertex = 0;            // 0-cells only
  std::size_t witness = kNoPath;     // nonzero composite realizing the cell
  std::vector<std::size_t> cuts;     // witness split points, size n+1 (0 ... length)
};

/// Cells are class tuples with a nonzero composite representative; faces
/// drop the first or last class or multiply neighbours.
struct CellComplex {
  HomotopyVariant variant = HomotopyVariant::natural;
  std::vector<std::vector<Cell>> cells;
  FaceComplex faces;
  bool caveat = false;

  std::size_t top() const { return cells.empty() ? 0 : cells.size() - 1; }
  std::vector<std::size_t> counts() const { return faces.counts; }
  std::optional<std::size_t> find(const std::vector<std::size_t>& classes) const;
  ChainComplex chain() const { return chain_complex(faces); }
  std::string label(const PathTable& pt, const PathClassTable& ct, std::size_t n,
                    std::size_t i) const;

 private:
  friend CellComplex build_complex(const PathTable&, const PathClassTable&, std::size_t);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index_;
};

CellComplex build_complex(const PathTable& pt, const PathClassTable& classes,
                          std::size_t max_dim = static_cast<std::size_t>(-1));

}  // namespace bqtop
