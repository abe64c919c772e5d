#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "support.hpp"

namespace bqtest {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && failures.size() < 20) failures.push_back(what);
  }
};

inline constexpr std::size_t kSuiteCases = 220;

inline SparseVec apply_columns(const std::vector<SparseVec>& cols, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v) out = add_scaled(out, cols.at(i), c);
  return out;
}

template <class Body>
SuiteResult run_suite(const std::string& name, std::uint64_t seed, IdealShape shape, Body body) {
  SuiteResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < kSuiteCases; ++i) {
    BoundQuiver q = random_bound_quiver(rng, shape);
    std::string tag = name + " case " + std::to_string(i) + ":\n" + serialize(q);
    ++r.cases;
    try {
      Pipeline pl(q);
      body(pl, tag, r);
    } catch (const std::exception& e) {
      r.failures.push_back(tag + " threw " + e.what());
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// delta^2 = 0 on both complexes, d^2 = 0 on SC, b^2 = 0 on the Hochschild complex.
inline SuiteResult boundary_suite() {
  return run_suite("boundaries", 1001, IdealShape::mixed,
                   [](Pipeline& pl, const std::string& tag, SuiteResult& r) {
    r.expect(pl.cx.chain().squares_to_zero(), tag + " delta^2 != 0 on B");
    r.expect(pl.sharp.chain().squares_to_zero(), tag + " delta^2 != 0 on B#");
    r.expect(pl.cx.faces.simplicial_identities(), tag + " face identities fail on B");
    SemiNormedResult res = find_semi_normed_basis(pl.pt, pl.natural);
    auto* A = std::get_if<SemiNormedAlgebra>(&res);
    if (A == nullptr) {
      ++r.skipped;
      return;
    }
    SimplicialComplexSC sc = simplicial_complex(*A);
    r.expect(sc.chain().squares_to_zero(), tag + " d^2 != 0 on SC");
    HochschildComplex hc = hochschild_complex(*A);
    for (std::size_t n = 0; n + 1 < hc.differential.size(); ++n)
      for (std::size_t c = 0; c < hc.differential[n].size(); ++c)
        r.expect(apply_columns(hc.differential[n + 1], hc.differential[n][c]).empty(),
                 tag + " b^2 != 0 in degree " + std::to_string(n));
  });
}

/// Comparison maps: mu eps = id, eps a cochain map, the schurian and
/// semi-commutative consequences, and the phi/psi isomorphism.
inline SuiteResult epsilon_mu_suite(std::size_t* schurian_cases = nullptr,
                                    std::size_t* iso_cases = nullptr) {
  std::size_t sch = 0, iso = 0;
  SuiteResult r = run_suite("epsilon_mu", 2002, IdealShape::mixed,
                            [&](Pipeline& pl, const std::string& tag, SuiteResult& r) {
    SemiNormedResult res = find_semi_normed_basis(pl.pt, pl.natural);
    auto* A = std::get_if<SemiNormedAlgebra>(&res);
    if (A == nullptr) {
      ++r.skipped;
      return;
    }
    SimplicialComplexSC sc = simplicial_complex(*A);
    HochschildComplex hc = hochschild_complex(*A);
    EpsilonMuReport em = epsilon_mu(*A, sc, hc);
    r.expect(em.mu_epsilon_identity, tag + " mu eps != id");
    r.expect(em.epsilon_chain, tag + " eps is not a cochain map");
    if (em.schurian) {
      ++sch;
      r.expect(em.mu_chain.value_or(false), tag + " schurian but mu is not a cochain map");
    }
    if (em.schurian && em.semi_commutative) {
      ++iso;
      r.expect(em.epsilon_mu_identity.value_or(false), tag + " eps mu != id");
      std::size_t len = std::max(em.sh_dims.size(), em.hh_dims.size());
      auto sh = em.sh_dims, hh = em.hh_dims;
      sh.resize(len, 0);
      hh.resize(len, 0);
      r.expect(sh == hh, tag + " dim SH != dim HH");
    }
    ComparisonReport cmp = phi_psi_maps(*A, sc, pl.natural, pl.cx, pl.walk, pl.sharp);
    r.expect(cmp.ok(), tag + " phi/psi checks fail");
    r.expect(groups(homology(sc.chain(), Coefficients::integers())) == integral_homology(pl.cx),
             tag + " SH != H(B)");
  });
  if (schurian_cases) *schurian_cases = sch;
  if (iso_cases) *iso_cases = iso;
  return r;
}

inline std::size_t components(const BoundQuiver& q) {
  std::vector<std::size_t> parent(q.vertex_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& a : q.arrows()) parent[find(a.source)] = find(a.target);
  std::size_t c = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) c += find(i) == i;
  return c;
}

/// Monomial ideals: B has the homology of the underlying graph and pi1 is free.
inline SuiteResult monomial_suite() {
  return run_suite("monomial", 3003, IdealShape::monomial,
                   [](Pipeline& pl, const std::string& tag, SuiteResult& r) {
    const BoundQuiver& q = pl.pt.quiver();
    std::size_t comp = components(q);
    std::size_t cyc = q.arrow_count() + comp - q.vertex_count();
    Groups h = integral_homology(pl.cx);
    bool graph = h.size() >= 1 && h[0] == Groups::value_type{comp, {}};
    graph = graph && (h.size() < 2 ? cyc == 0 : h[1] == Groups::value_type{cyc, {}});
    for (std::size_t i = 2; i < h.size(); ++i) graph = graph && h[i] == Groups::value_type{0, {}};
    r.expect(graph, tag + " homology differs from the underlying graph");
    r.expect(pl.mrs.relations.empty(), tag + " monomial ideal has minimal relations");
    AbelianInvariants ab = abelianization(pi1_presentation(pl.pt, pl.mrs));
    r.expect(ab.torsion.empty() && ab.rank == q.arrow_count() - q.vertex_count() + 1,
             tag + " pi1 abelianization is not free of rank |Q1|-|Q0|+1");
  });
}

inline bool hurewicz_holds(const Pipeline& pl) {
  Groups h = integral_homology(pl.cx);
  AbelianInvariants ab = abelianization(pi1_presentation(pl.pt, pl.mrs));
  std::vector<long> torsion;
  for (const auto& d : ab.torsion) torsion.push_back(d.get_si());
  Groups::value_type h1 = h.size() > 1 ? h[1] : Groups::value_type{0, {}};
  return h1 == Groups::value_type{ab.rank, torsion};
}

/// H1(B) against the abelianized pi1 presentation, on the corpus and on random inputs.
inline SuiteResult hurewicz_suite() {
  SuiteResult r = run_suite("hurewicz", 4004, IdealShape::mixed,
                            [](Pipeline& pl, const std::string& tag, SuiteResult& r) {
    r.expect(hurewicz_holds(pl), tag + " H1(B) != pi1^ab");
  });
  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(BQTOP_CORPUS_DIR))
    if (e.path().extension() == ".bq") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  for (const auto& n : names) {
    BoundQuiver q = corpus(n);
    if (!q.is_connected()) continue;
    Pipeline pl(q);
    r.expect(hurewicz_holds(pl), "corpus " + n + ": H1(B) != pi1^ab");
  }
  r.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline long alternating(const std::vector<std::size_t>& v) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * static_cast<long>(v[i]);
  return s;
}

/// Sum (-1)^i |C_i| = sum (-1)^i b_i for B, B# and SC.
inline SuiteResult euler_suite() {
  return run_suite("euler", 5005, IdealShape::mixed,
                   [](Pipeline& pl, const std::string& tag, SuiteResult& r) {
    for (const CellComplex* cx : {&pl.cx, &pl.sharp}) {
      ChainComplex ch = cx->chain();
      long betti = alternating(homology(ch, Coefficients::rationals()).ranks());
      r.expect(ch.euler_characteristic() == betti, tag + " Euler identity fails on a cell complex");
      long zb = 0;
      auto h = homology(ch, Coefficients::integers());
      for (std::size_t i = 0; i < h.groups.size(); ++i)
        zb += (i % 2 == 0 ? 1 : -1) * static_cast<long>(h.groups[i].rank);
      r.expect(zb == betti, tag + " integral and rational Betti numbers disagree");
    }
    SemiNormedResult res = find_semi_normed_basis(pl.pt, pl.natural);
    if (auto* A = std::get_if<SemiNormedAlgebra>(&res)) {
      ChainComplex sc = simplicial_complex(*A).chain();
      r.expect(sc.euler_characteristic() ==
                   alternating(homology(sc, Coefficients::rationals()).ranks()),
               tag + " Euler identity fails on SC");
    }
  });
}

struct FamilyResult {
  std::size_t quivers = 0;
  std::size_t ideals = 0;
  std::size_t schurian_semi_commutative = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline bool contains_subpath(const Path& big, const Path& small) {
  if (small.length() > big.length()) return false;
  return std::search(big.arrows.begin(), big.arrows.end(), small.arrows.begin(),
                     small.arrows.end()) != big.arrows.end();
}

/// Every monomial ideal on q, one per antichain of paths of length >= 2.
inline std::vector<BoundQuiver> monomial_ideals(const BoundQuiver& q) {
  std::vector<Path> paths = long_paths(q);
  std::vector<BoundQuiver> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << paths.size()); ++mask) {
    std::vector<Path> gens;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (mask >> i & 1) gens.push_back(paths[i]);
    bool antichain = true;
    for (std::size_t i = 0; i < gens.size() && antichain; ++i)
      for (std::size_t j = 0; j < gens.size() && antichain; ++j)
        if (i != j && contains_subpath(gens[i], gens[j])) antichain = false;
    if (!antichain) continue;
    BoundQuiver b = q;
    for (const auto& g : gens) b.add_relation(RelVector{g.source, g.target, {{g, Rational(1)}}});
    out.push_back(std::move(b));
  }
  return out;
}

/// Tree iff HH^1 = 0, and dim HH^1 = chi(Q) on schurian semi-commutative members.
inline FamilyResult hh1_family(const std::vector<std::string>& names) {
  FamilyResult r;
  for (const auto& name : names) {
    BoundQuiver q = corpus(name);
    ++r.quivers;
    long chi = 1 - static_cast<long>(q.vertex_count()) + static_cast<long>(q.arrow_count());
    bool tree = chi == 0;
    for (const BoundQuiver& b : monomial_ideals(q)) {
      ++r.ideals;
      std::string tag = name + " with relations {" + serialize(b) + "}";
      PathTable pt(b);
      AlgebraProperties props = algebra_properties(pt);
      MinimalRelationSet mrs = minimal_relation_supports(pt);
      PathClassTable natural = natural_homotopy_classes(pt, mrs);
      SemiNormedResult res = find_semi_normed_basis(pt, natural);
      auto* A = std::get_if<SemiNormedAlgebra>(&res);
      if (A == nullptr) {
        r.failures.push_back(tag + ": no semi-normed basis");
        continue;
      }
      std::vector<std::size_t> hh = hochschild_complex(*A).dims();
      std::size_t hh1 = hh.size() > 1 ? hh[1] : 0;
      if (tree != (hh1 == 0))
        r.failures.push_back(tag + ": tree=" + std::to_string(tree) +
                             " but dim HH^1=" + std::to_string(hh1));
      if (props.schurian && props.semi_commutative) {
        ++r.schurian_semi_commutative;
        if (static_cast<long>(hh1) != chi)
          r.failures.push_back(tag + ": dim HH^1=" + std::to_string(hh1) +
                               " but chi=" + std::to_string(chi));
      }
    }
  }
  return r;
}

inline const std::vector<std::string>& family_quivers() {
  static const std::vector<std::string> names = {
      "cor66_tree_path", "cor66_tree_star", "cor66_cycle_square", "cor66_cycle_kronecker",
      "cor66_cycle_triangles"};
  return names;
}

}  // namespace bqtest
