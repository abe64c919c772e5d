#include "bqtop/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bqtop {

std::size_t map_path(const PathTable& from, const PathTable& to, const QuiverMorphism& m,
                     std::size_t id) {
  const Path& p = from.path(id);
  Path q{m.vertex_map.at(p.source), m.vertex_map.at(p.target), {}};
  for (std::size_t a : p.arrows) q.arrows.push_back(m.arrow_map.at(a));
  auto hit = to.find(q);
  return hit ? *hit : kNoPath;
}

namespace {

bool well_formed(const BoundQuiver& src, const BoundQuiver& dst, const QuiverMorphism& m,
                 std::vector<std::string>& witnesses) {
  if (m.vertex_map.size() != src.vertex_count() || m.arrow_map.size() != src.arrow_count()) {
    witnesses.emplace_back("morphism does not cover every vertex and arrow");
    return false;
  }
  for (std::size_t v : m.vertex_map)
    if (v >= dst.vertex_count()) {
      witnesses.emplace_back("vertex image out of range");
      return false;
    }
  for (std::size_t a = 0; a < src.arrow_count(); ++a) {
    std::size_t b = m.arrow_map[a];
    if (b >= dst.arrow_count() ||
        dst.arrow(b).source != m.vertex_map[src.arrow(a).source] ||
        dst.arrow(b).target != m.vertex_map[src.arrow(a).target]) {
      witnesses.push_back("arrow " + src.arrow(a).name + " does not respect endpoints");
      return false;
    }
  }
  return true;
}

RelVector image_of(const PathTable& from, const PathTable& to, const QuiverMorphism& m,
                   const RelVector& v) {
  RelVector out{m.vertex_map.at(v.source), m.vertex_map.at(v.target), {}};
  for (const auto& [p, c] : v.terms) {
    Path q{m.vertex_map.at(p.source), m.vertex_map.at(p.target), {}};
    for (std::size_t a : p.arrows) q.arrows.push_back(m.arrow_map.at(a));
    if (q.length() > to.bound()) continue;
    out.terms[q] += c;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = sgn(it->second) == 0 ? out.terms.erase(it) : std::next(it);
  (void)from;
  return out;
}

std::string relation_text(const BoundQuiver& q, const RelVector& v) {
  std::string s;
  for (const auto& [p, c] : v.terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += c.get_str() + "*";
    s += q.path_name(p);
  }
  return s;
}

}  // namespace

CoveringReport check_covering(const PathTable& base, const PathTable& cover,
                              const QuiverMorphism& p) {
  CoveringReport r;
  const BoundQuiver& B = base.quiver();
  const BoundQuiver& C = cover.quiver();
  r.well_formed = well_formed(C, B, p, r.witnesses);
  if (!r.well_formed) {
    r.fibers_nonempty = r.local_bijections = r.ideal_preserved = r.relations_lift = false;
    return r;
  }
  r.fiber_sizes.assign(B.vertex_count(), 0);
  for (std::size_t v : p.vertex_map) ++r.fiber_sizes[v];
  for (std::size_t x = 0; x < B.vertex_count(); ++x)
    if (r.fiber_sizes[x] == 0) {
      r.fibers_nonempty = false;
      r.witnesses.push_back("empty fiber over vertex " + B.vertex_name(x));
    }

  for (std::size_t xh = 0; xh < C.vertex_count(); ++xh) {
    std::size_t x = p.vertex_map[xh];
    for (int dir = 0; dir < 2; ++dir) {
      auto local = dir == 0 ? C.out_arrows(xh) : C.in_arrows(xh);
      auto below = dir == 0 ? B.out_arrows(x) : B.in_arrows(x);
      std::vector<std::size_t> img;
      for (std::size_t a : local) img.push_back(p.arrow_map[a]);
      std::sort(img.begin(), img.end());
      if (img != below) {
        r.local_bijections = false;
        r.witnesses.push_back(std::string(dir == 0 ? "outgoing" : "incoming") +
                              " arrows at " + C.vertex_name(xh) + " do not map bijectively onto those at " +
                              B.vertex_name(x));
      }
    }
  }

  for (const auto& rel : C.relations()) {
    RelVector img = image_of(cover, base, p, rel);
    if (!base.member(img)) {
      r.ideal_preserved = false;
      r.witnesses.push_back("cover relation " + relation_text(C, rel) + " maps to " +
                            relation_text(B, img) + ", which is not in the base ideal");
    }
  }

  if (!r.local_bijections) {
    r.relations_lift = false;
    r.witnesses.emplace_back("relation lifting skipped: path lifting is not unique");
  } else {
    for (const auto& rel : B.relations())
      for (std::size_t xh = 0; xh < C.vertex_count(); ++xh) {
        if (p.vertex_map[xh] != rel.source) continue;
        ++r.lifts_checked;
        RelVector lift{xh, 0, {}};
        std::optional<std::size_t> end;
        bool closes = true;
        for (const auto& [w, c] : rel.terms) {
          Path hat{xh, xh, {}};
          std::size_t at = xh;
          for (std::size_t a : w.arrows)
            for (std::size_t b : C.out_arrows(at))
              if (p.arrow_map[b] == a) {
                hat.arrows.push_back(b);
                at = C.arrow(b).target;
                break;
              }
          hat.target = at;
          if (end && *end != at) closes = false;
          end = at;
          lift.terms[hat] += c;
        }
        lift.target = *end;
        if (!closes) {
          r.relations_lift = false;
          r.witnesses.push_back("lift of " + relation_text(B, rel) + " at " + C.vertex_name(xh) +
                                " does not end at a single vertex");
          continue;
        }
        if (!cover.member(lift)) {
          r.relations_lift = false;
          r.witnesses.push_back("lift " + relation_text(C, lift) + " of " + relation_text(B, rel) +
                                " is not in the cover ideal");
        }
      }
  }
  // condition 3 covers both directions: I lifts into the cover ideal and p maps it back into I
  r.relations_lift = r.relations_lift && r.ideal_preserved;
  r.covering = r.well_formed && r.fibers_nonempty && r.local_bijections && r.relations_lift;
  return r;
}

CoveringReport check_galois(const PathTable& base, const PathTable& cover, const QuiverMorphism& p,
                            const GroupAction& g) {
  CoveringReport r = check_covering(base, cover, p);
  r.galois_checked = true;
  r.group_order = g.elements.size();
  const BoundQuiver& C = cover.quiver();
  std::size_t nv = C.vertex_count();
  std::size_t na = C.arrow_count();

  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const QuiverMorphism& e = g.elements[i];
    const std::string& name = i < g.names.size() ? g.names[i] : std::to_string(i);
    if (!well_formed(C, C, e, r.witnesses)) {
      r.group_axioms = false;
      continue;
    }
    std::set<std::size_t> vs(e.vertex_map.begin(), e.vertex_map.end());
    std::set<std::size_t> as(e.arrow_map.begin(), e.arrow_map.end());
    if (vs.size() != nv || as.size() != na) {
      r.group_axioms = false;
      r.witnesses.push_back("element " + name + " is not bijective");
    }
    for (const auto& rel : C.relations())
      if (!cover.member(image_of(cover, cover, e, rel))) {
        r.group_preserves_ideal = false;
        r.witnesses.push_back("element " + name + " does not preserve the cover ideal");
        break;
      }
  }
  if (!r.group_axioms) {
    r.galois = false;
    return r;
  }
  auto find = [&](const QuiverMorphism& m) {
    return std::find(g.elements.begin(), g.elements.end(), m) != g.elements.end();
  };
  auto compose = [&](const QuiverMorphism& a, const QuiverMorphism& b) {  // a after b
    QuiverMorphism c;
    for (std::size_t v : b.vertex_map) c.vertex_map.push_back(a.vertex_map[v]);
    for (std::size_t x : b.arrow_map) c.arrow_map.push_back(a.arrow_map[x]);
    return c;
  };
  QuiverMorphism id;
  for (std::size_t v = 0; v < nv; ++v) id.vertex_map.push_back(v);
  for (std::size_t a = 0; a < na; ++a) id.arrow_map.push_back(a);
  if (!find(id)) {
    r.group_axioms = false;
    r.witnesses.emplace_back("identity missing from the group");
  }
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements)
      if (!find(compose(a, b))) {
        r.group_axioms = false;
        r.witnesses.emplace_back("group is not closed under composition");
        break;
      }
    QuiverMorphism inv;
    inv.vertex_map.assign(nv, 0);
    inv.arrow_map.assign(na, 0);
    for (std::size_t v = 0; v < nv; ++v) inv.vertex_map[a.vertex_map[v]] = v;
    for (std::size_t x = 0; x < na; ++x) inv.arrow_map[a.arrow_map[x]] = x;
    if (!find(inv)) {
      r.group_axioms = false;
      r.witnesses.emplace_back("group is not closed under inverses");
    }
  }

  if (r.well_formed)
    for (const auto& e : g.elements) {
      for (std::size_t v = 0; v < nv; ++v)
        if (p.vertex_map[e.vertex_map[v]] != p.vertex_map[v]) r.commutes_with_p = false;
      for (std::size_t a = 0; a < na; ++a)
        if (p.arrow_map[e.arrow_map[a]] != p.arrow_map[a]) r.commutes_with_p = false;
    }
  if (!r.commutes_with_p) r.witnesses.emplace_back("some element does not satisfy pg = p");

  if (r.well_formed) {
    auto transitive = [&](std::size_t count, auto proj, auto act, const char* what) {
      std::map<std::size_t, std::vector<std::size_t>> fibers;
      for (std::size_t i = 0; i < count; ++i) fibers[proj(i)].push_back(i);
      for (const auto& [below, fiber] : fibers) {
        std::set<std::size_t> orbit;
        for (const auto& e : g.elements) orbit.insert(act(e, fiber.front()));
        for (std::size_t i : fiber)
          if (orbit.count(i) == 0) {
            r.witnesses.push_back(std::string("group does not act transitively on the ") + what +
                                  " fiber of size " + std::to_string(fiber.size()));
            return false;
          }
      }
      return true;
    };
    r.transitive_vertices = transitive(
        nv, [&](std::size_t v) { return p.vertex_map[v]; },
        [](const QuiverMorphism& e, std::size_t v) { return e.vertex_map[v]; }, "vertex");
    r.transitive_arrows = transitive(
        na, [&](std::size_t a) { return p.arrow_map[a]; },
        [](const QuiverMorphism& e, std::size_t a) { return e.arrow_map[a]; }, "arrow");
  }
  for (const auto& e : g.elements) {
    if (e == id) continue;
    for (std::size_t v = 0; v < nv; ++v)
      if (e.vertex_map[v] == v) {
        r.fixed_point_free = false;
        r.witnesses.push_back("a non-identity element fixes vertex " + C.vertex_name(v));
        break;
      }
  }
  r.galois = r.covering && r.group_axioms && r.group_preserves_ideal && r.commutes_with_p &&
             r.transitive_vertices && r.transitive_arrows && r.fixed_point_free;
  return r;
}

std::optional<std::size_t> CellMapReport::uniform_fiber() const {
  std::optional<std::size_t> size;
  for (const auto& dim : fiber_sizes)
    for (std::size_t s : dim) {
      if (size && *size != s) return std::nullopt;
      size = s;
    }
  return size;
}

namespace {

std::size_t cell_vertex(const PathTable& pt, const Cell& c, std::size_t k) {
  if (c.classes.empty()) return c.vertex;
  const Path& w = pt.path(c.witness);
  if (c.cuts[k] == 0) return w.source;
  return pt.quiver().arrow(w.arrows[c.cuts[k] - 1]).target;
}

/// Cell map induced by a quiver morphism between complexes.
std::vector<std::vector<std::size_t>> induced_cells(const ComplexData& from, const ComplexData& to,
                                                    const QuiverMorphism& m) {
  const CellComplex& cx = *from.complex;
  std::vector<std::vector<std::size_t>> out(cx.cells.size());
  for (std::size_t n = 0; n < cx.cells.size(); ++n)
    for (const Cell& c : cx.cells[n]) {
      if (n == 0) {
        out[n].push_back(m.vertex_map[c.vertex]);
        continue;
      }
      std::vector<std::size_t> tuple;
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t part = from.table->subpath(c.witness, c.cuts[k], c.cuts[k + 1]);
        std::size_t img = map_path(*from.table, *to.table, m, part);
        if (img == kNoPath) {
          ok = false;
          break;
        }
        tuple.push_back(to.classes->class_of[img]);
      }
      auto hit = ok ? to.complex->find(tuple) : std::nullopt;
      out[n].push_back(hit ? *hit : kNoPath);
    }
  return out;
}

}  // namespace

CellMapReport lift_complex_map(const ComplexData& base, const ComplexData& cover,
                               const QuiverMorphism& p) {
  CoveringReport cov = check_covering(*base.table, *cover.table, p);
  if (!cov.covering) throw NotACovering("the morphism is not a covering");
  CellMapReport r;
  const PathTable& bt = *base.table;
  const PathTable& ct = *cover.table;

  std::map<std::size_t, std::size_t> class_image;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> per_source;  // (x^, base class) -> cover class
  for (std::size_t id = 0; id < ct.size(); ++id) {
    std::size_t img = map_path(ct, bt, p, id);
    if (img == kNoPath) continue;
    std::size_t cc = cover.classes->class_of[id];
    std::size_t bc = base.classes->class_of[img];
    auto [it, fresh] = class_image.emplace(cc, bc);
    if (!fresh && it->second != bc) {
      r.classes_compatible = false;
      r.witnesses.push_back("class of " + ct.name(id) + " maps to two base classes");
    }
    auto [jt, fresh2] = per_source.emplace(std::make_pair(ct.path(id).source, bc), cc);
    if (!fresh2 && jt->second != cc) {
      r.classes_compatible = false;
      r.witnesses.push_back("two cover classes at " + ct.quiver().vertex_name(ct.path(id).source) +
                            " map to the class of " + bt.name(img));
    }
  }

  r.map = induced_cells(cover, base, p);
  const CellComplex& cc = *cover.complex;
  const CellComplex& bc = *base.complex;
  r.fiber_sizes.resize(bc.cells.size());
  for (std::size_t n = 0; n < bc.cells.size(); ++n) r.fiber_sizes[n].assign(bc.cells[n].size(), 0);
  for (std::size_t n = 0; n < r.map.size(); ++n)
    for (std::size_t c = 0; c < r.map[n].size(); ++c) {
      std::size_t img = r.map[n][c];
      if (img == kNoPath || n >= bc.cells.size()) {
        r.faces_commute = false;
        r.witnesses.push_back("cover cell " + cc.label(ct, *cover.classes, n, c) +
                              " has no image cell");
        continue;
      }
      ++r.fiber_sizes[n][img];
      if (n == 0) continue;
      for (std::size_t i = 0; i <= n; ++i)
        if (bc.faces.faces[n][img][i] != r.map[n - 1][cc.faces.faces[n][c][i]]) {
          r.faces_commute = false;
          r.witnesses.push_back("face " + std::to_string(i) + " of " +
                                cc.label(ct, *cover.classes, n, c) + " does not commute");
        }
    }

  // pointed incidences: (cell, position) with the given vertex at that position
  std::size_t dims = std::max(cc.cells.size(), bc.cells.size());
  for (std::size_t n = 0; n < dims; ++n) {
    std::map<std::size_t, std::set<std::pair<std::size_t, std::size_t>>> below;
    if (n < bc.cells.size())
      for (std::size_t c = 0; c < bc.cells[n].size(); ++c)
        for (std::size_t k = 0; k <= n; ++k) below[cell_vertex(bt, bc.cells[n][c], k)].insert({c, k});
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> above;
    if (n < cc.cells.size())
      for (std::size_t c = 0; c < cc.cells[n].size(); ++c)
        for (std::size_t k = 0; k <= n; ++k)
          above[cell_vertex(ct, cc.cells[n][c], k)].emplace_back(
              n < r.map.size() ? r.map[n][c] : kNoPath, k);
    for (std::size_t xh = 0; xh < ct.quiver().vertex_count(); ++xh) {
      auto imgs = above[xh];
      std::set<std::pair<std::size_t, std::size_t>> got(imgs.begin(), imgs.end());
      if (got.size() != imgs.size() || got != below[p.vertex_map[xh]]) {
        r.local_bijection = false;
        r.witnesses.push_back("cells of dimension " + std::to_string(n) + " at " +
                              ct.quiver().vertex_name(xh) + " do not correspond bijectively");
      }
    }
  }
  return r;
}

DeckReport deck_group(const ComplexData& base, const ComplexData& cover, const QuiverMorphism& p,
                      const GroupAction& g) {
  CoveringReport gal = check_galois(*base.table, *cover.table, p, g);
  if (!gal.galois) throw NotGalois("the group action does not make the cover Galois");
  CellMapReport proj = lift_complex_map(base, cover, p);
  DeckReport r;
  r.order = g.elements.size();
  const CellComplex& cc = *cover.complex;
  for (std::size_t e = 0; e < g.elements.size(); ++e) {
    auto m = induced_cells(cover, cover, g.elements[e]);
    for (std::size_t n = 0; n < m.size(); ++n) {
      std::set<std::size_t> seen(m[n].begin(), m[n].end());
      if (seen.count(kNoPath) != 0 || seen.size() != m[n].size()) {
        r.automorphisms = false;
        r.witnesses.push_back("element " + std::to_string(e) + " is not bijective on " +
                              std::to_string(n) + "-cells");
        continue;
      }
      for (std::size_t c = 0; c < m[n].size(); ++c) {
        if (proj.map[n][m[n][c]] != proj.map[n][c]) r.compatible = false;
        if (n == 0) continue;
        for (std::size_t i = 0; i <= n; ++i)
          if (cc.faces.faces[n][m[n][c]][i] != m[n - 1][cc.faces.faces[n][c][i]])
            r.automorphisms = false;
      }
    }
    r.maps.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < r.maps.size(); ++a)
    for (std::size_t b = a + 1; b < r.maps.size(); ++b)
      if (r.maps[a] == r.maps[b]) {
        r.distinct = false;
        r.witnesses.push_back("elements " + std::to_string(a) + " and " + std::to_string(b) +
                              " induce the same cell map");
      }
  for (std::size_t v = 0; v < p.vertex_map.size(); ++v)
    if (p.vertex_map[v] == 0) r.base_fiber.push_back(v);
  std::set<std::size_t> orbit;
  for (const auto& m : r.maps) orbit.insert(m[0][r.base_fiber.front()]);
  r.transitive = orbit == std::set<std::size_t>(r.base_fiber.begin(), r.base_fiber.end());
  if (!r.compatible) r.witnesses.emplace_back("some deck map does not commute with the projection");
  return r;
}

std::optional<VoltageCover> voltage_cover(const BoundQuiver& base, std::size_t n,
                                          const std::vector<std::size_t>& voltage) {
  VoltageCover vc;
  BoundQuiver& c = vc.cover;
  c.set_field(base.field());
  for (const auto& v : base.vertices())
    for (std::size_t i = 0; i < n; ++i) c.add_vertex(v + "_" + std::to_string(i));
  for (std::size_t a = 0; a < base.arrow_count(); ++a) {
    const Arrow& arr = base.arrow(a);
    for (std::size_t i = 0; i < n; ++i)
      c.add_arrow(arr.name + "_" + std::to_string(i),
                  base.vertex_name(arr.source) + "_" + std::to_string(i),
                  base.vertex_name(arr.target) + "_" + std::to_string((i + voltage.at(a)) % n));
  }
  for (const auto& rel : base.relations())
    for (std::size_t i = 0; i < n; ++i) {
      RelVector lift{rel.source * n + i, 0, {}};
      std::optional<std::size_t> end;
      for (const auto& [w, coef] : rel.terms) {
        Path hat{rel.source * n + i, 0, {}};
        std::size_t level = i;
        for (std::size_t a : w.arrows) {
          hat.arrows.push_back(a * n + level);
          level = (level + voltage.at(a)) % n;
        }
        hat.target = w.target * n + level;
        if (end && *end != hat.target) return std::nullopt;
        end = hat.target;
        lift.terms.emplace(hat, coef);
      }
      lift.target = *end;
      c.add_relation(lift);
    }
  for (std::size_t v = 0; v < base.vertex_count(); ++v)
    for (std::size_t i = 0; i < n; ++i) vc.projection.vertex_map.push_back(v);
  for (std::size_t a = 0; a < base.arrow_count(); ++a)
    for (std::size_t i = 0; i < n; ++i) vc.projection.arrow_map.push_back(a);
  for (std::size_t k = 0; k < n; ++k) {
    QuiverMorphism g;
    for (std::size_t v = 0; v < base.vertex_count(); ++v)
      for (std::size_t i = 0; i < n; ++i) g.vertex_map.push_back(v * n + (i + k) % n);
    for (std::size_t a = 0; a < base.arrow_count(); ++a)
      for (std::size_t i = 0; i < n; ++i) g.arrow_map.push_back(a * n + (i + k) % n);
    vc.rotations.names.push_back("r" + std::to_string(k));
    vc.rotations.elements.push_back(std::move(g));
  }
  return vc;
}

}  // namespace bqtop
