#include "bqtop/quiver.hpp"

#include <algorithm>
#include <functional>

namespace bqtop {

std::size_t BoundQuiver::add_vertex(const std::string& id) {
  auto it = vertex_index_.find(id);
  if (it != vertex_index_.end()) return it->second;
  if (id.empty()) throw MalformedQuiver("empty vertex id");
  vertex_index_.emplace(id, vertices_.size());
  vertices_.push_back(id);
  return vertices_.size() - 1;
}

std::size_t BoundQuiver::add_arrow(const std::string& name, const std::string& src,
                                   const std::string& dst) {
  if (arrow_index_.count(name) != 0) throw MalformedQuiver("duplicate arrow name '" + name + "'");
  if (name.empty()) throw MalformedQuiver("empty arrow name");
  Arrow a{name, add_vertex(src), add_vertex(dst)};
  arrow_index_.emplace(name, arrows_.size());
  arrows_.push_back(a);
  return arrows_.size() - 1;
}

void BoundQuiver::add_relation(RelVector rel) {
  for (auto it = rel.terms.begin(); it != rel.terms.end();) {
    if (sgn(it->second) == 0)
      it = rel.terms.erase(it);
    else
      ++it;
  }
  if (rel.terms.empty()) throw MalformedRelation("relation is zero");
  for (const auto& [p, c] : rel.terms) {
    if (p.length() < 2)
      throw MalformedRelation("relation path '" + path_name(p) + "' has length < 2");
    if (p.source != rel.source || p.target != rel.target)
      throw MalformedRelation("relation mixes non-parallel paths ('" + path_name(p) + "' is not " +
                              vertex_name(rel.source) + " -> " + vertex_name(rel.target) + ")");
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
      if (arrows_.at(p.arrows[i]).target != arrows_.at(p.arrows[i + 1]).source)
        throw MalformedRelation("path '" + path_name(p) + "' does not compose");
  }
  relations_.push_back(std::move(rel));
}

std::size_t BoundQuiver::vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw MalformedQuiver("unknown vertex '" + id + "'");
  return it->second;
}

std::size_t BoundQuiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) throw MalformedQuiver("unknown arrow '" + name + "'");
  return it->second;
}

Path BoundQuiver::path_from_names(const std::vector<std::string>& names) const {
  if (names.empty()) throw MalformedRelation("empty path");
  Path p;
  for (const auto& n : names) p.arrows.push_back(arrow_index(n));
  p.source = arrows_[p.arrows.front()].source;
  p.target = arrows_[p.arrows.back()].target;
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (arrows_[p.arrows[i]].target != arrows_[p.arrows[i + 1]].source)
      throw MalformedRelation("arrows '" + names[i] + "' and '" + names[i + 1] +
                              "' do not compose");
  return p;
}

std::string BoundQuiver::path_name(const Path& p) const {
  if (p.arrows.empty()) return "e_" + vertices_.at(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i != 0) s += '*';
    s += arrows_.at(p.arrows[i]).name;
  }
  return s;
}

std::vector<std::size_t> BoundQuiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> BoundQuiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v) out.push_back(i);
  return out;
}

std::vector<std::vector<bool>> BoundQuiver::reachability() const {
  std::size_t n = vertices_.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto& a : arrows_) r[a.source][a.target] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

bool BoundQuiver::is_acyclic() const {
  auto r = reachability();
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i][i]) return false;
  return true;
}

bool BoundQuiver::is_connected() const {
  std::size_t n = vertices_.size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  std::size_t root = find(0);
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

std::size_t BoundQuiver::longest_path() const {
  std::size_t n = vertices_.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) order.push_back(i);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& a : arrows_)
      if (a.source == order[k] && --indeg[a.target] == 0) order.push_back(a.target);
  if (order.size() != n) throw MalformedQuiver("quiver has an oriented cycle");
  std::vector<std::size_t> best(n, 0);
  std::size_t top = 0;
  for (std::size_t v : order)
    for (const auto& a : arrows_)
      if (a.source == v) {
        best[a.target] = std::max(best[a.target], best[v] + 1);
        top = std::max(top, best[a.target]);
      }
  return top;
}

bool operator==(const BoundQuiver& a, const BoundQuiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return a.relations_ == b.relations_ && a.field_ == b.field_;
}

}  // namespace bqtop
