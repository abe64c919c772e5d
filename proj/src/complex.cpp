#include "bqtop/complex.hpp"

#include <stdexcept>

namespace bqtop {

std::optional<std::size_t> CellComplex::find(const std::vector<std::size_t>& classes) const {
  std::size_t n = classes.size();
  if (n >= index_.size() || n == 0) return std::nullopt;
  auto it = index_[n].find(classes);
  if (it == index_[n].end()) return std::nullopt;
  return it->second;
}

std::string CellComplex::label(const PathTable& pt, const PathClassTable& ct, std::size_t n,
                               std::size_t i) const {
  const Cell& c = cells.at(n).at(i);
  if (n == 0) return pt.quiver().vertex_name(c.vertex);
  std::string s = "(";
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    if (k != 0) s += ", ";
    s += pt.name(ct.classes[c.classes[k]].representative);
  }
  return s + ")";
}

namespace {

// Calls f(cuts) for every split of [0, len] into n nonempty parts.
template <class F>
void for_each_composition(std::size_t len, std::size_t n, F&& f) {
  std::vector<std::size_t> cuts(n + 1, 0);
  cuts[n] = len;
  // choose interior cut points 1 <= c1 < ... < c_(n-1) <= len-1
  std::vector<std::size_t> inner(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) inner[i] = i + 1;
  for (;;) {
    for (std::size_t i = 0; i + 1 < n; ++i) cuts[i + 1] = inner[i];
    f(cuts);
    if (n == 1) return;
    std::size_t k = n - 1;
    while (k > 0 && inner[k - 1] == len - n + k) --k;
    if (k == 0) return;
    ++inner[k - 1];
    for (std::size_t j = k; j + 1 < n; ++j) inner[j] = inner[j - 1] + 1;
  }
}

}  // namespace

CellComplex build_complex(const PathTable& pt, const PathClassTable& ct, std::size_t max_dim) {
  CellComplex cx;
  cx.variant = ct.variant;
  cx.caveat = ct.caveat || ct.truncated;
  const BoundQuiver& q = pt.quiver();

  std::size_t top = 0;
  for (std::size_t id = 0; id < pt.size(); ++id)
    if (pt.nonzero(id)) top = std::max(top, pt.path(id).length());
  if (max_dim < top) top = max_dim;

  std::vector<std::map<std::vector<std::size_t>, Cell>> found(top + 1);
  for (std::size_t id = 0; id < pt.size(); ++id) {
    if (!pt.nonzero(id)) continue;
    std::size_t len = pt.path(id).length();
    for (std::size_t n = 1; n <= std::min(len, top); ++n)
      for_each_composition(len, n, [&](const std::vector<std::size_t>& cuts) {
        std::vector<std::size_t> tuple(n);
        for (std::size_t k = 0; k < n; ++k)
          tuple[k] = ct.class_of[pt.subpath(id, cuts[k], cuts[k + 1])];
        if (found[n].count(tuple) != 0) return;
        Cell c;
        c.classes = tuple;
        c.witness = id;
        c.cuts = cuts;
        found[n].emplace(std::move(tuple), std::move(c));
      });
  }

  cx.cells.resize(top + 1);
  cx.index_.resize(top + 1);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Cell c;
    c.vertex = v;
    c.witness = pt.stationary(v);
    c.cuts = {0};
    cx.cells[0].push_back(c);
  }
  for (std::size_t n = 1; n <= top; ++n)
    for (auto& [tuple, cell] : found[n]) {
      cx.index_[n].emplace(tuple, cx.cells[n].size());
      cx.cells[n].push_back(std::move(cell));
    }

  FaceComplex& fc = cx.faces;
  fc.counts.resize(top + 1);
  fc.faces.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) fc.counts[n] = cx.cells[n].size();
  for (std::size_t n = 1; n <= top; ++n) {
    fc.faces[n].resize(cx.cells[n].size());
    for (std::size_t i = 0; i < cx.cells[n].size(); ++i) {
      const Cell& c = cx.cells[n][i];
      auto& out = fc.faces[n][i];
      out.resize(n + 1);
      if (n == 1) {
        out[0] = pt.path(c.witness).target;
        out[1] = pt.path(c.witness).source;
        continue;
      }
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> face;
        for (std::size_t j = 0; j < n; ++j) {
          if (k == 0 && j == 0) continue;
          if (k == n && j == n - 1) continue;
          if (k > 0 && k < n && j == k) continue;
          std::size_t to = (k > 0 && k < n && j == k - 1) ? c.cuts[j + 2] : c.cuts[j + 1];
          face.push_back(ct.class_of[pt.subpath(c.witness, c.cuts[j], to)]);
        }
        auto hit = cx.find(face);
        if (!hit) throw std::logic_error("face of a cell is not a cell");
        out[k] = *hit;
      }
    }
  }
  return cx;
}

}  // namespace bqtop
