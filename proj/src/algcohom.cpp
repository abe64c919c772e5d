#include "bqtop/algcohom.hpp"

#include <algorithm>
#include <stdexcept>

namespace bqtop {

std::string SemiNormedAlgebra::name(std::size_t i) const {
  const BasisElement& b = basis.at(i);
  std::string s = table->name(b.path);
  if (!b.scale.is_one()) s = b.scale.to_string() + "*" + s;
  return s;
}

namespace {

SparseVec apply_map(const std::vector<SparseVec>& columns, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v) out = add_scaled(out, columns.at(i), c);
  return out;
}

SemiNormedFailure failure(std::string reason, std::vector<std::string> witness = {}) {
  return SemiNormedFailure{std::move(reason), std::move(witness)};
}

}  // namespace

SemiNormedResult verify_semi_normed_basis(const PathTable& pt,
                                          const std::vector<std::pair<std::size_t, Scalar>>& family) {
  const BoundQuiver& q = pt.quiver();
  if (!q.is_acyclic()) throw TriangularRequired("semi-normed bases need an acyclic quiver");
  std::size_t n = q.vertex_count();
  SemiNormedAlgebra A;
  A.table = &pt;
  A.field = pt.field();
  A.by_pair.assign(n * n, {});
  A.identity.assign(n, kNoPath);
  for (const auto& [path, scale] : family) {
    const Path& p = pt.path(path);
    Scalar s = A.field.from(scale);
    if (s.is_zero()) return failure("basis element with zero scale", {pt.name(path)});
    BasisElement b{p.source, p.target, path, s, p.stationary()};
    std::size_t idx = A.basis.size();
    A.basis.push_back(b);
    A.by_pair[p.source * n + p.target].push_back(idx);
    if (b.identity && s.is_one()) A.identity[p.source] = idx;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (A.identity[v] == kNoPath)
      return failure("identity missing from the basis", {"e_" + q.vertex_name(v)});
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::size_t ap = pt.arrow_path(a);
    bool present = false;
    for (std::size_t i : A.by_pair[q.arrow(a).source * n + q.arrow(a).target])
      if (A.basis[i].path == ap && A.basis[i].scale.is_one()) present = true;
    if (!present) return failure("arrow missing from the basis", {q.arrow(a).name});
  }

  // per pair: basis images must form a basis of A(x,y)
  std::vector<Eliminator> span(n * n, Eliminator(A.field, true));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto& e = span[x * n + y];
      for (std::size_t i : A.by_pair[x * n + y]) {
        SparseVec img = scaled(pt.image(A.basis[i].path), A.basis[i].scale);
        if (!e.insert(img)) {
          std::vector<std::string> w;
          for (std::size_t j : A.by_pair[x * n + y]) w.push_back(A.name(j));
          return failure("basis elements from " + q.vertex_name(x) + " to " + q.vertex_name(y) +
                             " are linearly dependent",
                         w);
        }
      }
      if (e.rank() != pt.dim(x, y)) {
        std::vector<std::string> w;
        for (std::size_t j : A.by_pair[x * n + y]) w.push_back(A.name(j));
        return failure("A(" + q.vertex_name(x) + "," + q.vertex_name(y) + ") has dimension " +
                           std::to_string(pt.dim(x, y)) + " but the candidate family has " +
                           std::to_string(e.rank()) + " element(s)",
                       w);
      }
    }

  // coordinates of an image vector in the basis of A(x,y)
  auto single = [&](std::size_t x, std::size_t y, const SparseVec& v,
                    StructureConstant& out) -> bool {
    out = StructureConstant{};
    if (v.empty()) return true;
    auto [res, combo] = span[x * n + y].reduce_tracked(v);
    if (!res.empty() || combo.size() != 1) return false;
    out.zero = false;
    out.lambda = combo.front().second;
    out.index = A.by_pair[x * n + y].at(combo.front().first);
    return true;
  };

  for (std::size_t a = 0; a < A.basis.size(); ++a)
    for (std::size_t b = 0; b < A.basis.size(); ++b) {
      const BasisElement& ea = A.basis[a];
      const BasisElement& eb = A.basis[b];
      if (ea.target != eb.source) continue;
      StructureConstant sc;
      if (ea.identity && A.identity[ea.source] == a) {
        sc = {false, A.field.one(), b};
      } else if (eb.identity && A.identity[eb.source] == b) {
        sc = {false, A.field.one(), a};
      } else {
        std::size_t p = pt.concat(ea.path, eb.path);
        SparseVec v;
        if (p != kNoPath) v = scaled(pt.image(p), ea.scale * eb.scale);
        if (!single(ea.source, eb.target, v, sc))
          return failure("product is not a multiple of a basis element", {A.name(a), A.name(b)});
      }
      A.products.emplace(std::make_pair(a, b), sc);
    }

  A.path_basis.assign(pt.size(), kNoPath);
  A.path_scale.assign(pt.size(), A.field.zero());
  for (std::size_t id = 0; id < pt.size(); ++id) {
    if (!pt.nonzero(id)) continue;
    const Path& p = pt.path(id);
    StructureConstant sc;
    if (!single(p.source, p.target, pt.image(id), sc) || sc.zero)
      return failure("nonzero path is not a multiple of a single basis element", {pt.name(id)});
    A.path_basis[id] = sc.index;
    A.path_scale[id] = sc.lambda;
  }
  return A;
}

SemiNormedResult find_semi_normed_basis(const PathTable& pt, const PathClassTable& natural) {
  if (!pt.quiver().is_acyclic()) throw TriangularRequired("semi-normed bases need an acyclic quiver");
  std::vector<std::pair<std::size_t, Scalar>> family;
  for (std::size_t v = 0; v < pt.quiver().vertex_count(); ++v)
    family.emplace_back(pt.stationary(v), Scalar(1));
  for (const auto& c : natural.classes)
    if (!c.identity && c.nonzero) family.emplace_back(c.representative, Scalar(1));
  return verify_semi_normed_basis(pt, family);
}

std::optional<std::size_t> SimplicialComplexSC::find(const std::vector<std::size_t>& t) const {
  if (t.empty() || t.size() >= index_.size()) return std::nullopt;
  auto it = index_[t.size()].find(t);
  if (it == index_[t.size()].end()) return std::nullopt;
  return it->second;
}

SimplicialComplexSC simplicial_complex(const SemiNormedAlgebra& A) {
  SimplicialComplexSC sc;
  std::size_t n = A.vertex_count();
  sc.tuples.emplace_back(n);
  sc.lambda.emplace_back(n, A.field.one());
  sc.prod.emplace_back(A.identity);
  std::vector<std::size_t> arrows;
  for (std::size_t i = 0; i < A.basis.size(); ++i)
    if (!A.basis[i].identity) arrows.push_back(i);
  std::vector<std::vector<std::size_t>> level;
  std::vector<Scalar> lam;
  std::vector<std::size_t> prod;
  for (std::size_t i : arrows) {
    level.push_back({i});
    lam.push_back(A.field.one());
    prod.push_back(i);
  }
  while (!level.empty()) {
    sc.tuples.push_back(level);
    sc.lambda.push_back(lam);
    sc.prod.push_back(prod);
    std::vector<std::vector<std::size_t>> next;
    std::vector<Scalar> nlam;
    std::vector<std::size_t> nprod;
    for (std::size_t t = 0; t < level.size(); ++t)
      for (std::size_t b : arrows) {
        if (A.basis[prod[t]].target != A.basis[b].source) continue;
        const StructureConstant& s = A.product(prod[t], b);
        if (s.zero) continue;
        auto tuple = level[t];
        tuple.push_back(b);
        next.push_back(std::move(tuple));
        nlam.push_back(lam[t] * s.lambda);
        nprod.push_back(s.index);
      }
    level = std::move(next);
    lam = std::move(nlam);
    prod = std::move(nprod);
  }
  std::size_t top = sc.tuples.size() - 1;
  sc.index_.resize(top + 1);
  for (std::size_t d = 1; d <= top; ++d)
    for (std::size_t i = 0; i < sc.tuples[d].size(); ++i) sc.index_[d].emplace(sc.tuples[d][i], i);

  FaceComplex& fc = sc.faces;
  fc.counts.resize(top + 1);
  fc.faces.resize(top + 1);
  for (std::size_t d = 0; d <= top; ++d) fc.counts[d] = sc.tuples[d].size();
  for (std::size_t d = 1; d <= top; ++d) {
    fc.faces[d].resize(sc.tuples[d].size());
    for (std::size_t i = 0; i < sc.tuples[d].size(); ++i) {
      const auto& t = sc.tuples[d][i];
      auto& out = fc.faces[d][i];
      out.resize(d + 1);
      if (d == 1) {
        out[0] = A.basis[t[0]].target;
        out[1] = A.basis[t[0]].source;
        continue;
      }
      for (std::size_t k = 0; k <= d; ++k) {
        std::vector<std::size_t> face;
        if (k == 0) {
          face.assign(t.begin() + 1, t.end());
        } else if (k == d) {
          face.assign(t.begin(), t.end() - 1);
        } else {
          face.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k) - 1);
          face.push_back(A.product(t[k - 1], t[k]).index);
          face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(k) + 1, t.end());
        }
        auto hit = sc.find(face);
        if (!hit) throw std::logic_error("face of a simplicial tuple has zero product");
        out[k] = *hit;
      }
    }
  }
  return sc;
}

ComparisonReport phi_psi_maps(const SemiNormedAlgebra& A, const SimplicialComplexSC& sc,
                              const PathClassTable& natural, const CellComplex& cx,
                              const PathClassTable& walk, const CellComplex& cx_sharp) {
  const PathTable& pt = *A.table;
  ComparisonReport r;
  std::size_t top = std::max({sc.faces.top(), cx.faces.top(), cx_sharp.faces.top()});
  auto count = [](const FaceComplex& f, std::size_t d) {
    return d < f.counts.size() ? f.counts[d] : 0;
  };
  r.phi.resize(top + 1);
  r.psi.resize(top + 1);
  r.phi_sharp.resize(top + 1);

  for (const auto& c : natural.classes) {
    if (!c.nonzero || c.identity) continue;
    std::size_t b = kNoPath;
    for (std::size_t id : c.members) {
      if (!pt.nonzero(id)) continue;
      if (b == kNoPath) b = A.path_basis[id];
      if (A.path_basis[id] != b) {
        r.psi_well_defined = false;
        r.failures.push_back("class of " + pt.name(c.representative) +
                             " meets two basis elements");
      }
    }
  }

  for (std::size_t d = 0; d <= top; ++d) {
    std::size_t nsc = count(sc.faces, d);
    std::size_t ncx = count(cx.faces, d);
    std::size_t nsh = count(cx_sharp.faces, d);
    r.phi[d].assign(nsc, kNoPath);
    r.phi_sharp[d].assign(nsc, kNoPath);
    r.psi[d].assign(ncx, kNoPath);
    for (std::size_t s = 0; s < nsc; ++s) {
      if (d == 0) {
        r.phi[d][s] = s;
        r.phi_sharp[d][s] = s;
        continue;
      }
      std::vector<std::size_t> nat;
      std::vector<std::size_t> wk;
      for (std::size_t b : sc.tuples[d][s]) {
        nat.push_back(natural.class_of[A.basis[b].path]);
        wk.push_back(walk.class_of[A.basis[b].path]);
      }
      if (auto hit = cx.find(nat)) r.phi[d][s] = *hit;
      if (auto hit = cx_sharp.find(wk)) r.phi_sharp[d][s] = *hit;
    }
    for (std::size_t c = 0; c < ncx; ++c) {
      if (d == 0) {
        r.psi[d][c] = c;
        continue;
      }
      const Cell& cell = cx.cells[d][c];
      std::vector<std::size_t> t;
      for (std::size_t k = 0; k < d; ++k)
        t.push_back(A.path_basis[pt.subpath(cell.witness, cell.cuts[k], cell.cuts[k + 1])]);
      if (auto hit = sc.find(t)) r.psi[d][c] = *hit;
    }
    for (std::size_t s = 0; s < nsc; ++s) {
      std::size_t c = r.phi[d][s];
      if (c == kNoPath || r.psi[d][c] != s) r.psi_phi_identity = false;
    }
    for (std::size_t c = 0; c < ncx; ++c) {
      std::size_t s = r.psi[d][c];
      if (s == kNoPath || r.phi[d][s] != c) r.phi_psi_identity = false;
    }
    if (nsc != ncx) {
      r.phi_psi_identity = false;
      r.psi_phi_identity = false;
    }
    std::vector<bool> hit(nsh, false);
    for (std::size_t s = 0; s < nsc; ++s)
      if (r.phi_sharp[d][s] != kNoPath) hit[r.phi_sharp[d][s]] = true;
      else r.phi_sharp_onto = false;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) r.phi_sharp_onto = false;
    r.kernel_ranks.push_back(nsc >= nsh ? nsc - nsh : 0);

    if (d == 0) continue;
    for (std::size_t s = 0; s < nsc; ++s)
      for (std::size_t i = 0; i <= d; ++i) {
        std::size_t f = sc.faces.faces[d][s][i];
        std::size_t c = r.phi[d][s];
        if (c == kNoPath || r.phi[d - 1][f] != cx.faces.faces[d][c][i]) r.phi_chain = false;
        std::size_t h = r.phi_sharp[d][s];
        if (h == kNoPath || r.phi_sharp[d - 1][f] != cx_sharp.faces.faces[d][h][i])
          r.phi_sharp_chain = false;
      }
    for (std::size_t c = 0; c < ncx; ++c)
      for (std::size_t i = 0; i <= d; ++i) {
        std::size_t s = r.psi[d][c];
        std::size_t f = cx.faces.faces[d][c][i];
        if (s == kNoPath || r.psi[d - 1][f] != sc.faces.faces[d][s][i]) r.psi_chain = false;
      }
  }
  if (!r.phi_chain) r.failures.emplace_back("phi does not commute with faces");
  if (!r.psi_chain) r.failures.emplace_back("psi does not commute with faces");
  if (!r.phi_psi_identity) r.failures.emplace_back("phi psi is not the identity");
  if (!r.psi_phi_identity) r.failures.emplace_back("psi phi is not the identity");
  if (!r.phi_sharp_onto) r.failures.emplace_back("phi# is not onto");
  if (!r.phi_sharp_chain) r.failures.emplace_back("phi# does not commute with faces");
  return r;
}

std::size_t HochschildComplex::tuple_source(std::size_t n, std::size_t t) const {
  if (n == 0) return t;
  return algebra_->basis[tuples[n][t].front()].source;
}

std::size_t HochschildComplex::tuple_target(std::size_t n, std::size_t t) const {
  if (n == 0) return t;
  return algebra_->basis[tuples[n][t].back()].target;
}

std::optional<std::size_t> HochschildComplex::tuple_index(const std::vector<std::size_t>& t) const {
  if (t.empty() || t.size() >= tuple_index_.size()) return std::nullopt;
  auto it = tuple_index_[t.size()].find(t);
  if (it == tuple_index_[t.size()].end()) return std::nullopt;
  return it->second;
}

HochschildComplex hochschild_complex(const SemiNormedAlgebra& A) {
  if (!A.table->quiver().is_acyclic())
    throw TriangularRequired("Hochschild complex needs an acyclic quiver");
  HochschildComplex hc;
  hc.field = A.field;
  hc.algebra_ = &A;
  std::size_t n = A.vertex_count();
  std::vector<std::size_t> arrows;
  for (std::size_t i = 0; i < A.basis.size(); ++i)
    if (!A.basis[i].identity) arrows.push_back(i);

  hc.tuples.emplace_back(n);
  std::vector<std::vector<std::size_t>> level;
  for (std::size_t i : arrows) level.push_back({i});
  while (!level.empty()) {
    hc.tuples.push_back(level);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : level)
      for (std::size_t b : arrows)
        if (A.basis[t.back()].target == A.basis[b].source) {
          auto u = t;
          u.push_back(b);
          next.push_back(std::move(u));
        }
    level = std::move(next);
  }
  std::size_t top = hc.tuples.size() - 1;
  hc.tuple_index_.resize(top + 1);
  for (std::size_t d = 1; d <= top; ++d)
    for (std::size_t i = 0; i < hc.tuples[d].size(); ++i)
      hc.tuple_index_[d].emplace(hc.tuples[d][i], i);

  hc.basis.resize(top + 1);
  hc.index.resize(top + 1);
  for (std::size_t d = 0; d <= top; ++d)
    for (std::size_t t = 0; t < hc.tuples[d].size(); ++t)
      for (std::size_t tau : A.at(hc.tuple_source(d, t), hc.tuple_target(d, t))) {
        hc.index[d].emplace(std::make_pair(t, tau), hc.basis[d].size());
        hc.basis[d].emplace_back(t, tau);
      }

  hc.differential.resize(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    std::vector<std::map<std::size_t, Scalar>> cols(hc.basis[d].size());
    if (d < top) {
      auto add = [&](std::size_t t, std::size_t tau, std::size_t s, std::size_t out,
                     const Scalar& c) {
        auto col = hc.index[d].find({t, tau});
        if (col == hc.index[d].end()) return;
        cols[col->second][hc.index[d + 1].at({s, out})] += c;
      };
      for (std::size_t s = 0; s < hc.tuples[d + 1].size(); ++s) {
        const auto& st = hc.tuples[d + 1][s];
        std::size_t x0 = hc.tuple_source(d + 1, s);
        std::size_t xn = hc.tuple_target(d + 1, s);
        // sigma_1 * f(rest)
        std::size_t rest = d == 0 ? A.basis[st[0]].target
                                  : *hc.tuple_index({st.begin() + 1, st.end()});
        for (std::size_t tau : A.at(A.basis[st[0]].target, xn)) {
          const StructureConstant& p = A.product(st[0], tau);
          if (!p.zero) add(rest, tau, s, p.index, p.lambda);
        }
        // middle terms
        for (std::size_t j = 1; j <= d; ++j) {
          const StructureConstant& p = A.product(st[j - 1], st[j]);
          if (p.zero) continue;
          std::vector<std::size_t> t(st.begin(), st.begin() + static_cast<std::ptrdiff_t>(j) - 1);
          t.push_back(p.index);
          t.insert(t.end(), st.begin() + static_cast<std::ptrdiff_t>(j) + 1, st.end());
          std::size_t ti = *hc.tuple_index(t);
          Scalar sign = j % 2 == 0 ? p.lambda : -p.lambda;
          for (std::size_t tau : A.at(x0, xn)) add(ti, tau, s, tau, sign);
        }
        // f(front) * sigma_(n+1)
        std::size_t front = d == 0 ? A.basis[st[0]].source
                                   : *hc.tuple_index({st.begin(), st.end() - 1});
        for (std::size_t tau : A.at(x0, A.basis[st.back()].source)) {
          const StructureConstant& p = A.product(tau, st.back());
          if (p.zero) continue;
          add(front, tau, s, p.index, (d + 1) % 2 == 0 ? p.lambda : -p.lambda);
        }
      }
    }
    for (auto& c : cols) hc.differential[d].push_back(make_sparse(std::move(c)));
  }
  return hc;
}

std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& sizes,
                                         const std::vector<std::vector<SparseVec>>& d,
                                         const Field& k) {
  std::vector<std::size_t> ranks(sizes.size(), 0);
  for (std::size_t i = 0; i < sizes.size() && i < d.size(); ++i) ranks[i] = rank_of(d[i], k);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    out.push_back(sizes[i] - ranks[i] - (i == 0 ? 0 : ranks[i - 1]));
  return out;
}

std::vector<std::size_t> HochschildComplex::dims() const {
  std::vector<std::size_t> sizes;
  for (const auto& b : basis) sizes.push_back(b.size());
  return cohomology_dims(sizes, differential, field);
}

std::vector<std::vector<SparseVec>> sc_coboundaries(const SimplicialComplexSC& sc, const Field& k) {
  const FaceComplex& fc = sc.faces;
  std::vector<std::vector<SparseVec>> out(fc.counts.size());
  for (std::size_t d = 0; d < fc.counts.size(); ++d) {
    std::vector<std::map<std::size_t, Scalar>> cols(fc.counts[d]);
    if (d + 1 < fc.counts.size())
      for (std::size_t s = 0; s < fc.counts[d + 1]; ++s)
        for (std::size_t i = 0; i <= d + 1; ++i)
          cols[fc.faces[d + 1][s][i]][s] += k.from(Rational(i % 2 == 0 ? 1 : -1));
    for (auto& c : cols) out[d].push_back(make_sparse(std::move(c)));
  }
  return out;
}

bool EpsilonMuReport::iso_all() const {
  for (std::size_t i = 0; i < injective.size(); ++i)
    if (!injective[i] || !surjective[i]) return false;
  return true;
}

EpsilonMuReport epsilon_mu(const SemiNormedAlgebra& A, const SimplicialComplexSC& sc,
                           const HochschildComplex& hc) {
  if (A.field != hc.field) throw FieldMismatch("algebra and Hochschild complex use different fields");
  const Field& k = A.field;
  EpsilonMuReport r;
  const PathTable& pt = *A.table;
  // schurian and semi-commutative read off the path table
  std::size_t n = A.vertex_count();
  r.schurian = true;
  r.semi_commutative = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (pt.dim(x, y) > 1) r.schurian = false;
      bool zero = false;
      bool nonzero = false;
      for (std::size_t id : pt.between(x, y)) (pt.nonzero(id) ? nonzero : zero) = true;
      if (zero && nonzero) r.semi_commutative = false;
    }

  std::size_t top = std::max(sc.faces.top(), hc.top());
  auto sc_size = [&](std::size_t d) { return d < sc.faces.counts.size() ? sc.faces.counts[d] : 0; };
  auto hc_size = [&](std::size_t d) { return d < hc.basis.size() ? hc.basis[d].size() : 0; };

  r.epsilon.resize(top + 1);
  r.mu.resize(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    for (std::size_t s = 0; s < sc_size(d); ++s) {
      std::size_t t = d == 0 ? s : *hc.tuple_index(sc.tuples[d][s]);
      std::size_t col = hc.index[d].at({t, sc.prod[d][s]});
      r.epsilon[d].push_back({{col, sc.lambda[d][s]}});
    }
    for (std::size_t c = 0; c < hc_size(d); ++c) {
      auto [t, tau] = hc.basis[d][c];
      SparseVec v;
      if (d == 0) {
        if (tau == A.identity[t]) v.emplace_back(t, k.one());
      } else if (auto s = sc.find(hc.tuples[d][t]); s && sc.prod[d][*s] == tau) {
        v.emplace_back(*s, sc.lambda[d][*s].inverse());
      }
      r.mu[d].push_back(std::move(v));
    }
  }

  auto dsc = sc_coboundaries(sc, k);
  auto empty_map = std::vector<SparseVec>{};
  auto dsc_at = [&](std::size_t d) -> const std::vector<SparseVec>& {
    return d < dsc.size() ? dsc[d] : empty_map;
  };
  auto b_at = [&](std::size_t d) -> const std::vector<SparseVec>& {
    return d < hc.differential.size() ? hc.differential[d] : empty_map;
  };

  for (std::size_t d = 0; d <= top; ++d) {
    for (std::size_t s = 0; s < sc_size(d); ++s) {
      SparseVec e(1, {s, k.one()});
      if (apply_map(r.mu[d], apply_map(r.epsilon[d], e)) != e) r.mu_epsilon_identity = false;
      if (d + 1 <= top) {
        SparseVec lhs = b_at(d).empty() ? SparseVec{} : apply_map(b_at(d), apply_map(r.epsilon[d], e));
        SparseVec rhs = apply_map(r.epsilon[d + 1], dsc_at(d).empty() ? SparseVec{} : dsc_at(d)[s]);
        if (lhs != rhs) r.epsilon_chain = false;
      }
    }
  }
  if (r.schurian) {
    bool ok = true;
    for (std::size_t d = 0; d + 1 <= top && ok; ++d)
      for (std::size_t c = 0; c < hc_size(d); ++c) {
        SparseVec e(1, {c, k.one()});
        SparseVec lhs = dsc_at(d).empty() ? SparseVec{} : apply_map(dsc_at(d), apply_map(r.mu[d], e));
        SparseVec rhs = apply_map(r.mu[d + 1], b_at(d)[c]);
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
    r.mu_chain = ok;
  }
  if (r.schurian && r.semi_commutative) {
    bool ok = true;
    for (std::size_t d = 0; d <= top && ok; ++d)
      for (std::size_t c = 0; c < hc_size(d); ++c) {
        SparseVec e(1, {c, k.one()});
        if (apply_map(r.epsilon[d], apply_map(r.mu[d], e)) != e) {
          ok = false;
          break;
        }
      }
    r.epsilon_mu_identity = ok;
  }

  std::vector<std::size_t> sc_sizes;
  std::vector<std::size_t> hc_sizes;
  std::vector<std::vector<SparseVec>> dsc_full(top + 1);
  std::vector<std::vector<SparseVec>> b_full(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    sc_sizes.push_back(sc_size(d));
    hc_sizes.push_back(hc_size(d));
    dsc_full[d] = d < dsc.size() ? dsc[d] : std::vector<SparseVec>(sc_size(d));
    b_full[d] = d < hc.differential.size() ? hc.differential[d] : std::vector<SparseVec>(hc_size(d));
  }
  r.sh_dims = cohomology_dims(sc_sizes, dsc_full, k);
  r.hh_dims = cohomology_dims(hc_sizes, b_full, k);

  for (std::size_t d = 0; d <= top; ++d) {
    auto cycles = kernel_of(dsc_full[d], k);
    Eliminator boundaries(k);
    if (d > 0)
      for (const auto& col : b_full[d - 1]) boundaries.insert(col);
    std::size_t base = boundaries.rank();
    for (const auto& z : cycles) boundaries.insert(apply_map(r.epsilon[d], z));
    std::size_t img = boundaries.rank() - base;
    r.image_ranks.push_back(img);
    r.injective.push_back(img == r.sh_dims[d]);
    r.surjective.push_back(img == r.hh_dims[d]);
  }
  return r;
}

SparseVec hochschild_coboundary(const HochschildComplex& hc, std::size_t n, const SparseVec& f) {
  if (n >= hc.differential.size()) return {};
  return apply_map(hc.differential[n], f);
}

SparseVec hochschild_cup(const SemiNormedAlgebra& A, const HochschildComplex& hc, std::size_t p,
                         const SparseVec& f, std::size_t q, const SparseVec& g) {
  std::size_t d = p + q;
  if (d > hc.top()) return {};
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> fv;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> gv;
  for (const auto& [i, c] : f) fv[hc.basis[p][i].first].emplace_back(hc.basis[p][i].second, c);
  for (const auto& [i, c] : g) gv[hc.basis[q][i].first].emplace_back(hc.basis[q][i].second, c);
  std::map<std::size_t, Scalar> out;
  for (std::size_t s = 0; s < hc.tuples[d].size(); ++s) {
    const auto& t = hc.tuples[d][s];
    std::size_t front;
    std::size_t back;
    if (d == 0) {
      front = s;
      back = s;
    } else {
      front = p == 0 ? A.basis[t.front()].source
                     : *hc.tuple_index({t.begin(), t.begin() + static_cast<std::ptrdiff_t>(p)});
      back = q == 0 ? A.basis[t.back()].target
                    : *hc.tuple_index({t.begin() + static_cast<std::ptrdiff_t>(p), t.end()});
    }
    auto fi = fv.find(front);
    auto gi = gv.find(back);
    if (fi == fv.end() || gi == gv.end()) continue;
    for (const auto& [t1, c1] : fi->second)
      for (const auto& [t2, c2] : gi->second) {
        const StructureConstant& prod = A.product(t1, t2);
        if (prod.zero) continue;
        out[hc.index[d].at({s, prod.index})] += c1 * c2 * prod.lambda;
      }
  }
  return make_sparse(std::move(out));
}

}  // namespace bqtop
