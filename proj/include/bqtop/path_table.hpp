#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bqtop/linalg.hpp"
#include "bqtop/quiver.hpp"

namespace bqtop {

inline constexpr std::size_t kNoPath = static_cast<std::size_t>(-1);

struct PathTableOptions {
  std::size_t path_cap = 32;
  std::size_t max_paths = 2'000'000;
};

/// All paths of length <= L with the ideal I(x,y) in path coordinates.
/// Paths longer than L are not stored; they all lie in I.
class PathTable {
 public:
  PathTable(BoundQuiver bq, PathTableOptions opts = {});

  const BoundQuiver& quiver() const { return bq_; }
  const Field& field() const { return bq_.field(); }
  std::size_t bound() const { return L_; }
  std::size_t size() const { return paths_.size(); }
  const Path& path(std::size_t id) const { return paths_.at(id); }
  const std::vector<Path>& paths() const { return paths_; }
  std::string name(std::size_t id) const { return bq_.path_name(paths_.at(id)); }

  std::optional<std::size_t> find(const Path& p) const;
  std::size_t stationary(std::size_t v) const { return stationary_.at(v); }
  std::size_t arrow_path(std::size_t a) const { return arrow_path_.at(a); }
  /// id of p·q, or kNoPath when not composable or longer than L.
  std::size_t concat(std::size_t p, std::size_t q) const;
  std::size_t extend_right(std::size_t p, std::size_t arrow) const;
  std::size_t extend_left(std::size_t arrow, std::size_t p) const;
  /// Sub-path of arrows [from, to) of p.
  std::size_t subpath(std::size_t p, std::size_t from, std::size_t to) const;

  const std::vector<std::size_t>& between(std::size_t x, std::size_t y) const {
    return pair_paths_.at(x * n_ + y);
  }
  std::size_t local_index(std::size_t id) const { return local_.at(id); }
  bool in_ideal(std::size_t id) const { return in_ideal_.at(id); }
  bool nonzero(std::size_t id) const { return !in_ideal_.at(id); }
  std::size_t ideal_rank(std::size_t x, std::size_t y) const {
    return ideal_.at(x * n_ + y).rank();
  }
  std::size_t dim(std::size_t x, std::size_t y) const {
    return between(x, y).size() - ideal_rank(x, y);
  }
  const Eliminator& ideal(std::size_t x, std::size_t y) const { return ideal_.at(x * n_ + y); }

  /// Path coordinates of a relation vector inside kQ(x,y); paths past L are dropped.
  SparseVec coords(const RelVector& v) const;
  SparseVec unit(std::size_t id) const;
  /// Normal form of a vector modulo I(x,y): its image in A(x,y).
  SparseVec image(std::size_t x, std::size_t y, const SparseVec& v) const;
  SparseVec image(std::size_t id) const;
  bool member(const RelVector& v) const;
  RelVector relvector(std::size_t x, std::size_t y, const SparseVec& coords) const;

  /// Order used for paths: length, then arrow names, then vertex.
  bool path_less(const Path& a, const Path& b) const;

 private:
  void enumerate(std::size_t L, std::size_t max_paths);
  void build_ideal();
  bool top_length_in_ideal() const;

  BoundQuiver bq_;
  std::size_t n_ = 0;
  std::size_t L_ = 0;
  std::vector<std::size_t> name_rank_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
  std::vector<std::size_t> stationary_;
  std::vector<std::size_t> arrow_path_;
  std::vector<std::vector<std::size_t>> pair_paths_;
  std::vector<std::size_t> local_;
  std::vector<Eliminator> ideal_;
  std::vector<bool> in_ideal_;
};

/// Convenience wrapper matching the library vocabulary.
PathTable enumerate_paths(const BoundQuiver& bq, std::size_t cap = 32);
bool ideal_membership(const PathTable& pt, const RelVector& v);

}  // namespace bqtop
