#include "bqtop/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace bqtop {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

PathClassTable build_table(const PathTable& pt, UnionFind& uf, HomotopyVariant variant) {
  PathClassTable t;
  t.variant = variant;
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t id = 0; id < pt.size(); ++id) groups[uf.find(id)].push_back(id);
  std::vector<PathClass> classes;
  for (auto& [root, members] : groups) {
    PathClass c;
    c.members = std::move(members);
    std::sort(c.members.begin(), c.members.end());
    const Path& first = pt.path(c.members.front());
    c.source = first.source;
    c.target = first.target;
    c.identity = first.stationary();
    c.representative = c.members.front();
    for (std::size_t id : c.members)
      if (pt.nonzero(id)) {
        c.representative = id;
        c.nonzero = true;
        break;
      }
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const PathClass& a, const PathClass& b) {
    return a.representative < b.representative;
  });
  t.class_of.assign(pt.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t id : classes[i].members) t.class_of[id] = i;
  t.classes = std::move(classes);
  return t;
}

/// Normalizes a kernel vector to primitive integers (Q) or leading one (F_p).
SparseVec normalize_relation(const SparseVec& c, const Field& field) {
  if (c.empty()) return c;
  if (!field.is_rational()) return scaled(c, c.front().second.inverse());
  BigInt l = 1;
  for (const auto& [i, s] : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.rational().get_den_mpz_t());
  BigInt g = 0;
  for (const auto& [i, s] : c) {
    BigInt num = s.rational().get_num() * (l / s.rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational factor(l, g);
  factor.canonicalize();
  if (sgn(c.front().second.rational()) < 0) factor = -factor;
  return scaled(c, Scalar(factor));
}

}  // namespace

bool is_minimal_relation(const PathTable& pt, const RelVector& v, std::size_t cap) {
  SparseVec c = pt.coords(v);
  if (c.size() < 2) return false;
  if (c.size() > cap)
    throw SupportTooLarge("support " + std::to_string(c.size()) + " exceeds the oracle cap " +
                          std::to_string(cap));
  const Eliminator& ideal = pt.ideal(v.source, v.target);
  if (!ideal.contains(c)) return false;
  std::size_t m = c.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
    SparseVec sub;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i & 1U) != 0) sub.push_back(c[i]);
    if (ideal.contains(sub)) return false;
  }
  return true;
}

MinimalRelationSet minimal_relation_supports(const PathTable& pt, std::size_t support_cap) {
  MinimalRelationSet out;
  out.support_cap = support_cap;
  const Field& field = pt.field();
  std::size_t n = pt.quiver().vertex_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::size_t> nz;
      for (std::size_t id : pt.between(x, y))
        if (pt.nonzero(id)) nz.push_back(id);
      std::size_t k = nz.size();
      if (k < 2) continue;
      if (support_cap < k) {
        out.possibly_incomplete = true;
        out.warnings.push_back("support cap " + std::to_string(support_cap) + " below the " +
                               std::to_string(k) + " parallel nonzero paths from " +
                               pt.quiver().vertex_name(x) + " to " + pt.quiver().vertex_name(y));
      }
      std::vector<SparseVec> images;
      for (std::size_t id : nz) images.push_back(pt.image(id));
      std::size_t top = std::min(support_cap, k);
      for (std::size_t size = 2; size <= top; ++size) {
        std::vector<bool> pick(k, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
          std::vector<std::size_t> S;
          for (std::size_t i = 0; i < k; ++i)
            if (pick[i]) S.push_back(i);
          std::vector<SparseVec> cols;
          for (std::size_t i : S) cols.push_back(images[i]);
          auto basis = kernel_of(cols, field);
          if (basis.empty()) continue;
          std::size_t m = S.size();
          std::size_t full = (std::size_t{1} << m) - 1;
          // combination of the restricted columns by c
          auto restricted = [&](const SparseVec& c, std::size_t mask) {
            SparseVec acc;
            for (const auto& [j, s] : c)
              if ((mask >> j & 1U) != 0) acc = add_scaled(acc, cols[j], s);
            return acc;
          };
          bool blocked = false;
          for (std::size_t mask = 1; mask < full && !blocked; ++mask) {
            bool all_zero = true;
            for (const auto& b : basis)
              if (!restricted(b, mask).empty()) {
                all_zero = false;
                break;
              }
            blocked = all_zero;
          }
          if (blocked) continue;
          std::size_t tries = (full - 1) * (basis.size() - 1) + 1;
          if (!field.is_rational()) tries = std::min<std::size_t>(tries, field.characteristic() - 1);
          bool found = false;
          for (std::size_t t = 1; t <= tries && !found; ++t) {
            SparseVec c;
            Scalar power = field.one();
            for (const auto& b : basis) {
              c = add_scaled(c, b, power);
              power *= field.from(Rational(static_cast<unsigned long>(t)));
            }
            if (c.size() != m) continue;
            bool ok = true;
            for (std::size_t mask = 1; mask < full && ok; ++mask)
              if (restricted(c, mask).empty()) ok = false;
            if (!ok) continue;
            c = normalize_relation(c, field);
            SparseVec local;
            for (const auto& [j, s] : c) local.emplace_back(pt.local_index(nz[S[j]]), s);
            std::sort(local.begin(), local.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            MinimalRelation mr;
            mr.vec = pt.relvector(x, y, local);
            for (std::size_t j : S) mr.support.push_back(nz[j]);
            if (!is_minimal_relation(pt, mr.vec, std::max<std::size_t>(12, m)))
              throw std::logic_error("minimal relation search produced a non-minimal vector");
            out.relations.push_back(std::move(mr));
            found = true;
          }
          if (!found) {
            out.possibly_incomplete = true;
            out.warnings.push_back("no generic minimal relation found for a support of size " +
                                   std::to_string(m) + " over " + field.name());
          }
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
    }
  return out;
}

PathClassTable natural_homotopy_classes(const PathTable& pt, const MinimalRelationSet& mrs) {
  UnionFind uf(pt.size());
  const BoundQuiver& q = pt.quiver();
  bool inhomogeneous = false;
  for (const auto& mr : mrs.relations) {
    for (std::size_t id : mr.support) {
      uf.unite(mr.support.front(), id);
      if (pt.path(id).length() != pt.path(mr.support.front()).length()) inhomogeneous = true;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> right;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> left;
    for (std::size_t id = 0; id < pt.size(); ++id) {
      if (pt.path(id).stationary()) continue;
      std::size_t root = uf.find(id);
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        std::size_t r = pt.extend_right(id, a);
        if (r != kNoPath) {
          auto [it, fresh] = right.emplace(std::make_pair(root, a), r);
          if (!fresh && uf.unite(it->second, r)) changed = true;
        }
        std::size_t l = pt.extend_left(a, id);
        if (l != kNoPath) {
          auto [it, fresh] = left.emplace(std::make_pair(root, a), l);
          if (!fresh && uf.unite(it->second, l)) changed = true;
        }
      }
    }
  }
  PathClassTable t = build_table(pt, uf, HomotopyVariant::natural);
  t.truncated = inhomogeneous && !q.is_acyclic();
  return t;
}

Word path_word(const PathTable& pt, std::size_t path_id) {
  Word w;
  for (std::size_t a : pt.path(path_id).arrows) w.push_back(static_cast<int>(a) + 1);
  return w;
}

namespace {

/// BFS spanning tree over the undirected graph on `allowed`, grown from the
/// visited vertices in `queue`, scanning arrows in declared order.
void grow_tree(const BoundQuiver& q, const std::vector<bool>& allowed, std::vector<bool>& visited,
               std::deque<std::size_t> queue, std::vector<std::size_t>& tree) {
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (!allowed[arr.source] || !allowed[arr.target]) continue;
      std::size_t other;
      if (arr.source == v)
        other = arr.target;
      else if (arr.target == v)
        other = arr.source;
      else
        continue;
      if (visited[other]) continue;
      visited[other] = true;
      tree.push_back(a);
      queue.push_back(other);
    }
  }
}

/// Presentation on the full subquiver spanned by `allowed`, generators
/// named with `suffix`, tree arrows given as quiver arrow indices.
GroupPresentation sub_presentation(const PathTable& pt, const MinimalRelationSet& mrs,
                                   const std::vector<bool>& allowed,
                                   const std::vector<std::size_t>& tree, std::size_t base,
                                   const std::string& suffix) {
  const BoundQuiver& q = pt.quiver();
  GroupPresentation p;
  p.base = base;
  std::vector<int> letter(q.arrow_count(), 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!allowed[arr.source] || !allowed[arr.target]) continue;
    p.generators.push_back(arr.name + suffix);
    letter[a] = static_cast<int>(p.generators.size());
  }
  auto word = [&](std::size_t id) {
    Word w;
    for (std::size_t a : pt.path(id).arrows) w.push_back(letter[a]);
    return w;
  };
  for (std::size_t a : tree) {
    p.tree.push_back(static_cast<std::size_t>(letter[a]) - 1);
    p.relators.push_back({letter[a]});
  }
  for (const auto& mr : mrs.relations) {
    bool inside = true;
    for (std::size_t id : mr.support)
      for (std::size_t a : pt.path(id).arrows)
        if (letter[a] == 0) inside = false;
    if (!inside) continue;
    Word w1 = word(mr.support.front());
    for (std::size_t j = 1; j < mr.support.size(); ++j)
      p.relators.push_back(concat(w1, inverse(word(mr.support[j]))));
  }
  return p;
}

GroupPresentation forest_presentation(const PathTable& pt, const MinimalRelationSet& mrs) {
  const BoundQuiver& q = pt.quiver();
  std::vector<bool> allowed(q.vertex_count(), true);
  std::vector<bool> visited(q.vertex_count(), false);
  std::vector<std::size_t> tree;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (visited[v]) continue;
    visited[v] = true;
    grow_tree(q, allowed, visited, {v}, tree);
  }
  return sub_presentation(pt, mrs, allowed, tree, 0, "");
}

enum class WordVerdict { equal, distinct, unknown };

class WordSolver {
 public:
  WordSolver(const GroupPresentation& p, std::size_t bound, std::size_t cap)
      : p_(p), bound_(bound), cap_(cap) {
    for (const auto& r : p.relators)
      for (const Word& base : {r, inverse(r)}) {
        Word rot = base;
        for (std::size_t k = 0; k < rot.size(); ++k) {
          pieces_.insert(rot);
          std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
      }
  }

  WordVerdict decide(const Word& raw) {
    Word w = cyclic_canonical(raw);
    if (w.empty()) return WordVerdict::equal;
    if (p_.relators.empty()) return WordVerdict::distinct;
    if (!abelian_trivial(p_, w)) return WordVerdict::distinct;
    std::set<Word> seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
      Word cur = queue.front();
      queue.pop_front();
      Word rot = cur;
      for (std::size_t k = 0; k < std::max<std::size_t>(1, cur.size()); ++k) {
        for (const Word& r : pieces_)
          for (std::size_t split = 0; split <= r.size(); ++split) {
            if (split > rot.size()) break;
            if (!std::equal(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(split), rot.begin()))
              continue;
            // r = A B with A a prefix of rot, so A = B^-1
            Word next(r.begin() + static_cast<std::ptrdiff_t>(split), r.end());
            next = inverse(next);
            next.insert(next.end(), rot.begin() + static_cast<std::ptrdiff_t>(split), rot.end());
            next = cyclic_canonical(next);
            if (next.empty()) return WordVerdict::equal;
            if (next.size() > bound_) {
              truncated_ = true;
              continue;
            }
            if (seen.size() >= cap_) {
              truncated_ = true;
              continue;
            }
            if (seen.insert(next).second) queue.push_back(std::move(next));
          }
        if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      }
    }
    return WordVerdict::unknown;
  }
  bool truncated() const { return truncated_; }

 private:
  const GroupPresentation& p_;
  std::size_t bound_;
  std::size_t cap_;
  std::set<Word> pieces_;
  bool truncated_ = false;
};

}  // namespace

GroupPresentation pi1_presentation(const PathTable& pt, const MinimalRelationSet& mrs,
                                   std::size_t base_vertex) {
  const BoundQuiver& q = pt.quiver();
  if (!q.is_connected()) throw NotConnected("quiver is not connected");
  if (base_vertex >= q.vertex_count()) throw MalformedQuiver("base vertex out of range");
  std::vector<bool> allowed(q.vertex_count(), true);
  std::vector<bool> visited(q.vertex_count(), false);
  visited[base_vertex] = true;
  std::vector<std::size_t> tree;
  grow_tree(q, allowed, visited, {base_vertex}, tree);
  return sub_presentation(pt, mrs, allowed, tree, base_vertex, "");
}

PathClassTable walk_homotopy_classes(const PathTable& pt, const MinimalRelationSet& mrs,
                                     const PathClassTable& natural, WalkOptions opts) {
  std::size_t bound = opts.depth_bound != 0 ? opts.depth_bound : 2 * pt.bound() + 4;
  SimplifiedPresentation s = simplify_with_map(forest_presentation(pt, mrs));
  auto word = [&](std::size_t id) {
    Word w;
    for (std::size_t a : pt.path(id).arrows) w = concat(w, s.image[a]);
    return free_reduce(w);
  };
  WordSolver solver(s.presentation, bound, opts.state_cap);

  UnionFind uf(pt.size());
  for (const auto& c : natural.classes)
    for (std::size_t id : c.members) uf.unite(c.members.front(), id);

  bool unresolved = false;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> roots;
  for (const auto& c : natural.classes) {
    if (c.identity) continue;
    auto& list = roots[{c.source, c.target}];
    Word wc = word(c.representative);
    bool merged = false;
    for (std::size_t r : list) {
      WordVerdict v = solver.decide(concat(wc, inverse(word(r))));
      if (v == WordVerdict::equal) {
        uf.unite(r, c.representative);
        merged = true;
        break;
      }
      if (v == WordVerdict::unknown) unresolved = true;
    }
    if (!merged) list.push_back(c.representative);
  }
  PathClassTable t = build_table(pt, uf, HomotopyVariant::walk);
  t.depth_bound = bound;
  t.caveat = unresolved && solver.truncated();
  t.truncated = natural.truncated;
  return t;
}

PathClassTable walk_homotopy_classes(const PathTable& pt, const MinimalRelationSet& mrs,
                                     WalkOptions opts) {
  return walk_homotopy_classes(pt, mrs, natural_homotopy_classes(pt, mrs), opts);
}

VanKampenResult van_kampen_pushout(const PathTable& pt, const MinimalRelationSet& mrs,
                                   const std::vector<std::size_t>& v1,
                                   const std::vector<std::size_t>& v2) {
  const BoundQuiver& q = pt.quiver();
  std::size_t n = q.vertex_count();
  std::vector<bool> in1(n, false);
  std::vector<bool> in2(n, false);
  for (std::size_t v : v1) in1.at(v) = true;
  for (std::size_t v : v2) in2.at(v) = true;
  std::vector<bool> in0(n, false);
  VanKampenResult res;
  for (std::size_t v = 0; v < n; ++v) {
    in0[v] = in1[v] && in2[v];
    if (in1[v]) res.v1.push_back(v);
    if (in2[v]) res.v2.push_back(v);
    if (in0[v]) res.v0.push_back(v);
  }
  if (res.v0.empty()) throw HypothesisViolated("the intersection of the two vertex sets is empty");

  for (std::size_t id = 0; id < pt.size(); ++id) {
    if (!pt.nonzero(id)) continue;
    const Path& p = pt.path(id);
    bool all1 = in1[p.source];
    bool all2 = in2[p.source];
    for (std::size_t a : p.arrows) {
      all1 = all1 && in1[q.arrow(a).target];
      all2 = all2 && in2[q.arrow(a).target];
    }
    if (!all1 && !all2)
      throw HypothesisViolated("nonzero path '" + pt.name(id) +
                               "' lies in neither subquiver");
  }
  auto reach = q.reachability();
  auto check_convex = [&](const std::vector<bool>& in, const char* label) {
    for (std::size_t z = 0; z < n; ++z) {
      if (in[z]) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (in[x] && in[y] && reach[x][z] && reach[z][y])
            throw HypothesisViolated(std::string("subquiver ") + label + " is not convex: vertex " +
                                     q.vertex_name(z) + " lies on a path from " +
                                     q.vertex_name(x) + " to " + q.vertex_name(y));
    }
  };
  check_convex(in1, "V1");
  check_convex(in2, "V2");

  std::size_t base = res.v0.front();
  std::vector<std::size_t> t0;
  std::vector<bool> seen0(n, false);
  seen0[base] = true;
  grow_tree(q, in0, seen0, {base}, t0);
  for (std::size_t v : res.v0)
    if (!seen0[v])
      throw HypothesisViolated("intersection subquiver is disconnected (vertex " +
                               q.vertex_name(v) + " unreachable from " + q.vertex_name(base) + ")");
  auto extend = [&](const std::vector<bool>& in, const char* label) {
    std::vector<std::size_t> tree = t0;
    std::vector<bool> seen = seen0;
    std::deque<std::size_t> queue(res.v0.begin(), res.v0.end());
    grow_tree(q, in, seen, queue, tree);
    for (std::size_t v = 0; v < n; ++v)
      if (in[v] && !seen[v])
        throw HypothesisViolated(std::string("subquiver ") + label + " is disconnected");
    return tree;
  };
  std::vector<std::size_t> t1 = extend(in1, "V1");
  std::vector<std::size_t> t2 = extend(in2, "V2");

  res.q0 = sub_presentation(pt, mrs, in0, t0, base, "");
  res.q1 = sub_presentation(pt, mrs, in1, t1, base, "");
  res.q2 = sub_presentation(pt, mrs, in2, t2, base, "");
  GroupPresentation p1 = sub_presentation(pt, mrs, in1, t1, base, "@1");
  GroupPresentation p2 = sub_presentation(pt, mrs, in2, t2, base, "@2");

  GroupPresentation& out = res.pushout;
  out.base = base;
  out.generators = p1.generators;
  out.generators.insert(out.generators.end(), p2.generators.begin(), p2.generators.end());
  int shift = static_cast<int>(p1.generators.size());
  out.relators = p1.relators;
  for (const auto& r : p2.relators) {
    Word w = r;
    for (int& x : w) x += x > 0 ? shift : -shift;
    out.relators.push_back(std::move(w));
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!in0[arr.source] || !in0[arr.target]) continue;
    auto pos = [&](const GroupPresentation& g, const std::string& name) {
      return static_cast<int>(std::find(g.generators.begin(), g.generators.end(), name) -
                              g.generators.begin()) + 1;
    };
    int l1 = pos(p1, arr.name + "@1");
    int l2 = pos(p2, arr.name + "@2") + shift;
    out.relators.push_back({l1, -l2});
  }
  return res;
}

}  // namespace bqtop
