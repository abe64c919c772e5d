#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace bqtest;

namespace {

SemiNormedAlgebra algebra(const SemiNormedResult& r) {
  const auto* A = std::get_if<SemiNormedAlgebra>(&r);
  REQUIRE_MESSAGE(A != nullptr, std::get<SemiNormedFailure>(r).reason);
  return *A;
}

std::set<std::string> basis_names(const SemiNormedAlgebra& A) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < A.basis.size(); ++i) out.insert(A.name(i));
  return out;
}

std::set<std::vector<std::string>> tuple_names(const SemiNormedAlgebra& A,
                                               const SimplicialComplexSC& sc, std::size_t n) {
  std::set<std::vector<std::string>> out;
  for (const auto& t : sc.tuples[n]) {
    std::vector<std::string> names;
    for (std::size_t i : t) names.push_back(A.name(i));
    out.insert(names);
  }
  return out;
}

/// Pads with zeros to length n, or drops trailing zeros down to it.
std::vector<std::size_t> padded(std::vector<std::size_t> v, std::size_t n) {
  while (v.size() > n && v.back() == 0) v.pop_back();
  v.resize(std::max(n, v.size()), 0);
  return v;
}

SparseVec random_vec(std::mt19937_64& rng, std::size_t size) {
  std::uniform_int_distribution<long> d(-2, 2);
  std::map<std::size_t, Scalar> m;
  for (std::size_t i = 0; i < size; ++i) m[i] = Scalar(d(rng));
  return make_sparse(m);
}

SparseVec apply_cochain(const std::vector<SparseVec>& cols, const Cochain& f) {
  SparseVec out;
  for (std::size_t i = 0; i < f.size(); ++i) out = add_scaled(out, cols[i], f[i]);
  return out;
}

struct Algebra {
  Pipeline pl;
  SemiNormedAlgebra A;
  SimplicialComplexSC sc;
  HochschildComplex hc;

  explicit Algebra(BoundQuiver q)
      : pl(std::move(q)),
        A(algebra(find_semi_normed_basis(pl.pt, pl.natural))),
        sc(simplicial_complex(A)),
        hc(hochschild_complex(A)) {}
  Algebra(const Algebra&) = delete;
};

}  // namespace

TEST_CASE("semi-normed bases") {
  SUBCASE("pres1") {
    Algebra a(corpus("pres1"));
    CHECK(basis_names(a.A) == std::set<std::string>{"e_1", "e_2", "e_3", "a", "b", "g", "g*a"});
    CHECK(a.A.basis.size() == algebra_properties(a.pl.pt).dimension);
  }
  SUBCASE("schurian inputs always succeed") {
    for (const char* name : {"sphere", "sphere_prime", "hhgap", "hheq", "rp2_cover", "cor66_tree_path"}) {
      Pipeline pl(corpus(name));
      SemiNormedAlgebra A = algebra(find_semi_normed_basis(pl.pt, pl.natural));
      CHECK_MESSAGE(A.basis.size() == algebra_properties(pl.pt).dimension, std::string(name));
    }
  }
  SUBCASE("nosn has none") {
    Pipeline pl(corpus("nosn"));
    SemiNormedResult r = find_semi_normed_basis(pl.pt, pl.natural);
    const auto* f = std::get_if<SemiNormedFailure>(&r);
    REQUIRE(f != nullptr);
    CHECK_FALSE(f->reason.empty());
    CHECK_FALSE(f->witness.empty());
  }
  SUBCASE("oriented cycles are refused") {
    BoundQuiver q;
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "1");
    q.add_relation(RelVector{0, 0, {{q.path_from_names({"a", "b"}), Rational(1)}}});
    q.add_relation(RelVector{1, 1, {{q.path_from_names({"b", "a"}), Rational(1)}}});
    Pipeline pl(q);
    CHECK_THROWS_AS(find_semi_normed_basis(pl.pt, pl.natural), TriangularRequired);
  }
  SUBCASE("every nonzero path is a multiple of one basis element") {
    for (const char* name : {"ex1", "pres2", "ker", "rp2", "sphere"}) {
      Algebra a(corpus(name));
      for (std::size_t w = 0; w < a.pl.pt.size(); ++w) {
        if (!a.pl.pt.nonzero(w)) continue;
        std::size_t b = a.A.path_basis[w];
        REQUIRE(b != kNoPath);
        const BasisElement& e = a.A.basis[b];
        CHECK(a.pl.pt.image(w) == scaled(a.pl.pt.image(e.path), a.A.path_scale[w] * e.scale));
      }
    }
  }
  SUBCASE("structure constants match the algebra") {
    Algebra a(corpus("ker"));
    const PathTable& pt = a.pl.pt;
    for (const auto& [pair, sc] : a.A.products) {
      const BasisElement& x = a.A.basis[pair.first];
      const BasisElement& y = a.A.basis[pair.second];
      std::size_t xy = pt.concat(x.path, y.path);
      SparseVec lhs = xy == kNoPath ? SparseVec{} : scaled(pt.image(xy), x.scale * y.scale);
      if (sc.zero) {
        CHECK(lhs.empty());
      } else {
        const BasisElement& z = a.A.basis[sc.index];
        CHECK(lhs == scaled(pt.image(z.path), sc.lambda * z.scale));
      }
    }
  }
}

TEST_CASE("simplicial homology depends on the presentation") {
  Algebra one(corpus("pres1"));
  CHECK(tuple_names(one.A, one.sc, 2) == std::set<std::vector<std::string>>{{"g", "a"}});
  CHECK(groups(homology(one.sc.chain(), Coefficients::integers()))[1] == Groups::value_type{1, {}});

  Pipeline two(corpus("pres2"));
  std::vector<std::pair<std::size_t, Scalar>> family;
  for (std::size_t i = 0; i < one.A.basis.size(); ++i)
    family.emplace_back(two.id(one.A.name(i)), one.A.basis[i].scale);
  SemiNormedAlgebra B = algebra(verify_semi_normed_basis(two.pt, family));
  CHECK(basis_names(B) == basis_names(one.A));
  SimplicialComplexSC sc2 = simplicial_complex(B);
  CHECK(tuple_names(B, sc2, 2) == std::set<std::vector<std::string>>{{"g", "a"}, {"b", "a"}});
  CHECK(groups(homology(sc2.chain(), Coefficients::integers()))[1] == Groups::value_type{0, {}});

  SUBCASE("verify mode rejects a dependent family") {
    std::vector<std::pair<std::size_t, Scalar>> bad = family;
    bad.emplace_back(two.id("b*a"), Scalar(1));
    CHECK(std::holds_alternative<SemiNormedFailure>(verify_semi_normed_basis(two.pt, bad)));
  }
}

TEST_CASE("one arrow is a segment") {
  Algebra a(parse_quiver("arrow a 1 2\n"));
  CHECK(groups(homology(a.sc.chain(), Coefficients::integers())) == Groups{{1, {}}, {0, {}}});
  CHECK(a.hc.dims() == std::vector<std::size_t>{1, 0});
}

TEST_CASE("SC agrees with the classifying space") {
  for (const char* name : {"pres1", "pres2", "ex1", "rp2", "ker", "sphere", "vk"}) {
    Algebra a(corpus(name));
    CHECK_MESSAGE(a.sc.chain().squares_to_zero(), std::string(name));
    ComparisonReport cmp = phi_psi_maps(a.A, a.sc, a.pl.natural, a.pl.cx, a.pl.walk, a.pl.sharp);
    CHECK_MESSAGE(cmp.ok(), std::string(name));
    CHECK(groups(homology(a.sc.chain(), Coefficients::integers())) == integral_homology(a.pl.cx));
    CHECK(groups(cohomology(a.sc.chain(), Coefficients::modulo(4))) ==
          groups(cohomology(a.pl.cx.chain(), Coefficients::modulo(4))));
  }
}

TEST_CASE("phi sharp kernels") {
  SUBCASE("ker") {
    Algebra a(corpus("ker"));
    ComparisonReport cmp = phi_psi_maps(a.A, a.sc, a.pl.natural, a.pl.cx, a.pl.walk, a.pl.sharp);
    CHECK(cmp.ok());
    CHECK(cmp.kernel_ranks == std::vector<std::size_t>{0, 7, 10, 3});
    CHECK(cmp.failures.empty());
  }
  SUBCASE("schurian input has phi sharp = phi") {
    Algebra a(corpus("sphere"));
    ComparisonReport cmp = phi_psi_maps(a.A, a.sc, a.pl.natural, a.pl.cx, a.pl.walk, a.pl.sharp);
    for (std::size_t k : cmp.kernel_ranks) CHECK(k == 0);
    CHECK(cmp.phi == cmp.phi_sharp);
  }
}

TEST_CASE("Hochschild cohomology") {
  CHECK(padded(Algebra(corpus("hhgap")).hc.dims(), 4) == std::vector<std::size_t>{1, 1, 1, 0});
  CHECK(padded(Algebra(corpus("hheq")).hc.dims(), 4) == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(padded(Algebra(corpus("ker")).hc.dims(), 4) == std::vector<std::size_t>{1, 4, 0, 0});
  for (const char* name : {"ex1", "rp2", "sphere", "pres1", "vk"}) {
    Algebra a(corpus(name));
    CHECK_MESSAGE(a.hc.dims().at(0) == 1, std::string(name));
  }
  SUBCASE("over F_3") {
    BoundQuiver q = corpus("hhgap");
    q.set_field(Field::prime(3));
    Algebra a(q);
    CHECK(a.hc.field == Field::prime(3));
    CHECK(padded(a.hc.dims(), 4) == std::vector<std::size_t>{1, 1, 1, 0});
  }
  SUBCASE("b squared vanishes") {
    for (const char* name : {"hhgap", "ker", "rp2", "sphere_prime"}) {
      Algebra a(corpus(name));
      for (std::size_t n = 0; n + 1 < a.hc.differential.size(); ++n)
        for (const auto& col : a.hc.differential[n]) {
          SparseVec out;
          for (const auto& [i, c] : col) out = add_scaled(out, a.hc.differential[n + 1].at(i), c);
          CHECK_MESSAGE(out.empty(), std::string(name));
        }
    }
  }
}

TEST_CASE("epsilon and mu") {
  SUBCASE("hhgap") {
    Algebra a(corpus("hhgap"));
    EpsilonMuReport em = epsilon_mu(a.A, a.sc, a.hc);
    CHECK(em.mu_epsilon_identity);
    CHECK(em.epsilon_chain);
    CHECK(em.schurian);
    CHECK_FALSE(em.semi_commutative);
    CHECK(em.mu_chain == std::optional<bool>(true));
    CHECK_FALSE(em.epsilon_mu_identity.has_value());
    CHECK(padded(em.sh_dims, 3) == std::vector<std::size_t>{1, 1, 0});
    CHECK(padded(em.hh_dims, 3) == std::vector<std::size_t>{1, 1, 1});
    REQUIRE(em.surjective.size() >= 3);
    CHECK_FALSE(em.surjective[2]);
    CHECK_FALSE(em.iso_all());
  }
  SUBCASE("hheq is an isomorphism anyway") {
    Algebra a(corpus("hheq"));
    EpsilonMuReport em = epsilon_mu(a.A, a.sc, a.hc);
    CHECK_FALSE(em.semi_commutative);
    CHECK(em.iso_all());
    CHECK(padded(em.sh_dims, 3) == padded(em.hh_dims, 3));
  }
  SUBCASE("incidence algebra of the cube") {
    Algebra a(corpus("sphere_prime"));
    EpsilonMuReport em = epsilon_mu(a.A, a.sc, a.hc);
    CHECK(em.schurian);
    CHECK(em.semi_commutative);
    CHECK(em.epsilon_mu_identity == std::optional<bool>(true));
    CHECK(em.iso_all());
    CHECK(padded(em.hh_dims, 4) == std::vector<std::size_t>{1, 0, 0, 0});
  }
  SUBCASE("non-schurian input leaves mu unchecked") {
    Algebra a(corpus("ker"));
    EpsilonMuReport em = epsilon_mu(a.A, a.sc, a.hc);
    CHECK(em.mu_epsilon_identity);
    CHECK(em.epsilon_chain);
    CHECK_FALSE(em.mu_chain.has_value());
  }
  SUBCASE("fields must agree") {
    Algebra q(corpus("hhgap"));
    BoundQuiver f3 = corpus("hhgap");
    f3.set_field(Field::prime(3));
    Algebra p(f3);
    CHECK_THROWS_AS(epsilon_mu(q.A, q.sc, p.hc), FieldMismatch);
  }
}

TEST_CASE("Hochschild cup products") {
  Algebra a(corpus("hhgap"));
  std::mt19937_64 rng(5);
  SparseVec unit;
  for (std::size_t i = 0; i < a.hc.basis[0].size(); ++i)
    if (a.A.basis[a.hc.basis[0][i].second].identity) unit.emplace_back(i, Scalar(1));
  CHECK(hochschild_coboundary(a.hc, 0, unit).empty());

  SUBCASE("unit") {
    for (std::size_t q = 0; q <= a.hc.top(); ++q) {
      SparseVec g = random_vec(rng, a.hc.basis[q].size());
      CHECK(hochschild_cup(a.A, a.hc, 0, unit, q, g) == g);
      CHECK(hochschild_cup(a.A, a.hc, q, g, 0, unit) == g);
    }
  }
  SUBCASE("degree zero is pointwise") {
    SparseVec f = random_vec(rng, a.hc.basis[0].size());
    SparseVec g = random_vec(rng, a.hc.basis[0].size());
    SparseVec fg = hochschild_cup(a.A, a.hc, 0, f, 0, g);
    for (std::size_t i = 0; i < a.hc.basis[0].size(); ++i)
      CHECK(coefficient(fg, i) == coefficient(f, i) * coefficient(g, i));
  }
  SUBCASE("degree one cocycles multiply to a cocycle") {
    std::vector<SparseVec> z1 = kernel_of(a.hc.differential[1], a.hc.field);
    REQUIRE_FALSE(z1.empty());
    for (const auto& f : z1)
      for (const auto& g : z1)
        CHECK(hochschild_coboundary(a.hc, 2, hochschild_cup(a.A, a.hc, 1, f, 1, g)).empty());
  }
  SUBCASE("epsilon preserves cup products") {
    for (const char* name : {"hhgap", "sphere", "pres1", "ker"}) {
      Algebra b(corpus(name));
      EpsilonMuReport em = epsilon_mu(b.A, b.sc, b.hc);
      const FaceComplex& fc = b.sc.faces;
      for (std::size_t p = 0; p <= fc.top(); ++p)
        for (std::size_t q = 0; p + q <= fc.top(); ++q) {
          Cochain f(fc.counts[p]), g(fc.counts[q]);
          for (auto& x : f) x = Scalar(static_cast<long>(rng() % 5) - 2);
          for (auto& x : g) x = Scalar(static_cast<long>(rng() % 5) - 2);
          SparseVec lhs = apply_cochain(em.epsilon[p + q], cup_product(fc, p, f, q, g));
          SparseVec rhs = hochschild_cup(b.A, b.hc, p, apply_cochain(em.epsilon[p], f), q, apply_cochain(em.epsilon[q], g));
          CHECK_MESSAGE(lhs == rhs, std::string(name));
        }
    }
  }
}
