#include "bqtop/path_table.hpp"

#include <algorithm>
#include <numeric>

namespace bqtop {

PathTable::PathTable(BoundQuiver bq, PathTableOptions opts) : bq_(std::move(bq)) {
  n_ = bq_.vertex_count();
  if (n_ == 0) throw MalformedQuiver("quiver has no vertices");
  for (const auto& rel : bq_.relations())
    for (const auto& [p, c] : rel.terms)
      if (p.length() < 2)
        throw MalformedRelation("relation path '" + bq_.path_name(p) + "' has length < 2");

  std::vector<std::size_t> order(bq_.arrow_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return bq_.arrow(a).name < bq_.arrow(b).name; });
  name_rank_.assign(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) name_rank_[order[i]] = i;

  if (bq_.is_acyclic()) {
    enumerate(bq_.longest_path() + 1, opts.max_paths);
    build_ideal();
    return;
  }
  for (std::size_t L = 2; L <= opts.path_cap; ++L) {
    enumerate(L, opts.max_paths);
    build_ideal();
    if (top_length_in_ideal()) return;
  }
  throw AdmissibilityError("no length L <= " + std::to_string(opts.path_cap) +
                           " with every path of length L in the ideal; the ideal is not "
                           "admissible or the path cap is too small (raise --path-cap)");
}

bool PathTable::path_less(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.arrows.size(); ++i) {
    std::size_t ra = name_rank_[a.arrows[i]];
    std::size_t rb = name_rank_[b.arrows[i]];
    if (ra != rb) return ra < rb;
  }
  return a.source < b.source;
}

void PathTable::enumerate(std::size_t L, std::size_t max_paths) {
  L_ = L;
  paths_.clear();
  index_.clear();
  std::vector<Path> level;
  for (std::size_t v = 0; v < n_; ++v) level.push_back(bq_.stationary(v));
  for (std::size_t len = 0; len <= L; ++len) {
    std::sort(level.begin(), level.end(),
              [this](const Path& a, const Path& b) { return path_less(a, b); });
    for (const auto& p : level) paths_.push_back(p);
    if (paths_.size() > max_paths)
      throw AdmissibilityError("more than " + std::to_string(max_paths) +
                               " paths below the length bound; lower --path-cap");
    if (len == L) break;
    std::vector<Path> next;
    for (const auto& p : level)
      for (std::size_t a : bq_.out_arrows(p.target)) {
        Path q = p;
        q.arrows.push_back(a);
        q.target = bq_.arrow(a).target;
        next.push_back(std::move(q));
      }
    level = std::move(next);
  }
  stationary_.assign(n_, kNoPath);
  arrow_path_.assign(bq_.arrow_count(), kNoPath);
  pair_paths_.assign(n_ * n_, {});
  local_.assign(paths_.size(), 0);
  for (std::size_t id = 0; id < paths_.size(); ++id) {
    const Path& p = paths_[id];
    index_.emplace(p, id);
    if (p.stationary()) stationary_[p.source] = id;
    if (p.length() == 1) arrow_path_[p.arrows[0]] = id;
    auto& bucket = pair_paths_[p.source * n_ + p.target];
    local_[id] = bucket.size();
    bucket.push_back(id);
  }
}

void PathTable::build_ideal() {
  ideal_.assign(n_ * n_, Eliminator(bq_.field()));
  std::vector<std::vector<std::size_t>> ending(n_);
  std::vector<std::vector<std::size_t>> starting(n_);
  for (std::size_t id = 0; id < paths_.size(); ++id) {
    ending[paths_[id].target].push_back(id);
    starting[paths_[id].source].push_back(id);
  }
  for (const auto& rel : bq_.relations()) {
    std::size_t shortest = L_ + 1;
    for (const auto& [p, c] : rel.terms) shortest = std::min(shortest, p.length());
    if (shortest > L_) continue;
    for (std::size_t u : ending[rel.source]) {
      const Path& up = paths_[u];
      if (up.length() + shortest > L_) continue;
      for (std::size_t v : starting[rel.target]) {
        const Path& vp = paths_[v];
        if (up.length() + vp.length() + shortest > L_) continue;
        std::map<std::size_t, Scalar> acc;
        for (const auto& [w, c] : rel.terms) {
          if (up.length() + w.length() + vp.length() > L_) continue;
          Path full{up.source, vp.target, up.arrows};
          full.arrows.insert(full.arrows.end(), w.arrows.begin(), w.arrows.end());
          full.arrows.insert(full.arrows.end(), vp.arrows.begin(), vp.arrows.end());
          acc[local_[index_.at(full)]] += bq_.field().from(c);
        }
        ideal_[up.source * n_ + vp.target].insert(make_sparse(std::move(acc)));
      }
    }
  }
  in_ideal_.assign(paths_.size(), false);
  for (std::size_t id = 0; id < paths_.size(); ++id) {
    const Path& p = paths_[id];
    in_ideal_[id] = ideal_[p.source * n_ + p.target].contains(unit(id));
  }
}

bool PathTable::top_length_in_ideal() const {
  for (std::size_t id = 0; id < paths_.size(); ++id)
    if (paths_[id].length() == L_ && !in_ideal_[id]) return false;
  return true;
}

std::optional<std::size_t> PathTable::find(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PathTable::concat(std::size_t p, std::size_t q) const {
  const Path& a = paths_.at(p);
  const Path& b = paths_.at(q);
  if (a.target != b.source) return kNoPath;
  if (a.length() + b.length() > L_) return kNoPath;
  if (a.stationary()) return q;
  if (b.stationary()) return p;
  Path c{a.source, b.target, a.arrows};
  c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
  return index_.at(c);
}

std::size_t PathTable::extend_right(std::size_t p, std::size_t arrow) const {
  return concat(p, arrow_path_.at(arrow));
}

std::size_t PathTable::extend_left(std::size_t arrow, std::size_t p) const {
  return concat(arrow_path_.at(arrow), p);
}

std::size_t PathTable::subpath(std::size_t p, std::size_t from, std::size_t to) const {
  const Path& a = paths_.at(p);
  if (from == to) {
    std::size_t v = from == 0 ? a.source : bq_.arrow(a.arrows[from - 1]).target;
    return stationary_.at(v);
  }
  Path s;
  s.arrows.assign(a.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                  a.arrows.begin() + static_cast<std::ptrdiff_t>(to));
  s.source = bq_.arrow(s.arrows.front()).source;
  s.target = bq_.arrow(s.arrows.back()).target;
  return index_.at(s);
}

SparseVec PathTable::coords(const RelVector& v) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [p, c] : v.terms) {
    if (p.length() > L_) continue;
    auto id = find(p);
    if (!id) throw MalformedRelation("path '" + bq_.path_name(p) + "' is not in the quiver");
    if (p.source != v.source || p.target != v.target)
      throw MalformedRelation("vector mixes non-parallel paths");
    acc[local_[*id]] += field().from(c);
  }
  return make_sparse(std::move(acc));
}

SparseVec PathTable::unit(std::size_t id) const { return {{local_.at(id), field().one()}}; }

SparseVec PathTable::image(std::size_t x, std::size_t y, const SparseVec& v) const {
  return ideal_.at(x * n_ + y).reduce(v);
}

SparseVec PathTable::image(std::size_t id) const {
  const Path& p = paths_.at(id);
  return image(p.source, p.target, unit(id));
}

bool PathTable::member(const RelVector& v) const {
  if (v.terms.empty()) return true;
  return ideal_.at(v.source * n_ + v.target).contains(coords(v));
}

RelVector PathTable::relvector(std::size_t x, std::size_t y, const SparseVec& c) const {
  RelVector r{x, y, {}};
  const auto& ids = between(x, y);
  for (const auto& [i, s] : c) {
    Rational q = s.is_residue() ? Rational(static_cast<unsigned long>(s.residue_value()))
                                : s.rational();
    r.terms.emplace(paths_.at(ids.at(i)), q);
  }
  return r;
}

PathTable enumerate_paths(const BoundQuiver& bq, std::size_t cap) {
  PathTableOptions o;
  o.path_cap = cap;
  return PathTable(bq, o);
}

bool ideal_membership(const PathTable& pt, const RelVector& v) { return pt.member(v); }

}  // namespace bqtop
