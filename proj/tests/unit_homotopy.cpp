#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace bqtest;

namespace {

std::vector<std::size_t> vertex_set(const BoundQuiver& q, std::vector<std::string> names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(q.vertex(n));
  return out;
}

AbelianInvariants invariants(const nlohmann::json& j) {
  AbelianInvariants a;
  a.rank = j["rank"];
  for (long d : j["torsion"]) a.torsion.push_back(d);
  return a;
}

BoundQuiver parallel_three() {
  return parse_quiver(
      "arrow x1 1 2\narrow x2 1 2\narrow x3 1 2\narrow y 2 3\n"
      "rel x1*y - x2*y\nrel x1*y - x3*y\n");
}

}  // namespace

TEST_CASE("is_minimal_relation follows the definition") {
  PathTable pt(parallel_three());
  RelVector w = relvec(pt, {{"x1*y", 2}, {"x2*y", -1}, {"x3*y", -1}});
  CHECK(is_minimal_relation(pt, w) == oracle()["w_sum_minimal"].get<bool>());
  CHECK(is_minimal_relation(pt, relvec(pt, {{"x1*y", 1}, {"x2*y", -1}})));
  CHECK_FALSE(is_minimal_relation(pt, relvec(pt, {{"x1*y", 1}, {"x2*y", 1}})));
  CHECK_THROWS_AS(is_minimal_relation(pt, w, 2), SupportTooLarge);
}

TEST_CASE("minimal relation supports") {
  SUBCASE("ex1") {
    PathTable pt(corpus("ex1"));
    MinimalRelationSet m = minimal_relation_supports(pt);
    REQUIRE(m.relations.size() == 1);
    CHECK(m.relations[0].support ==
          std::vector<std::size_t>{path_id(pt, "b*a"), path_id(pt, "g*a")});
    CHECK_FALSE(m.possibly_incomplete);
  }
  SUBCASE("ex3 has exactly one among the beta gamma paths") {
    PathTable pt(corpus("ex3"));
    const BoundQuiver& q = pt.quiver();
    MinimalRelationSet m = minimal_relation_supports(pt);
    std::vector<MinimalRelation> at51;
    for (const auto& r : m.relations)
      if (r.vec.source == q.vertex("5") && r.vec.target == q.vertex("1")) at51.push_back(r);
    REQUIRE(at51.size() == 1);
    CHECK(at51[0].support.size() == 3);
    // alpha*beta1*gamma1 lies in I, so the two other long paths form one too
    REQUIRE(m.relations.size() == 2);
    std::vector<std::size_t> other = {path_id(pt, "alpha*beta2*gamma2"), path_id(pt, "alpha*beta3*gamma3")};
    std::sort(other.begin(), other.end());
    CHECK((m.relations[0].support == other || m.relations[1].support == other));
  }
  SUBCASE("vk has two at (3,1)") {
    PathTable pt(corpus("vk"));
    MinimalRelationSet m = minimal_relation_supports(pt);
    REQUIRE(m.relations.size() == 2);
    for (const auto& r : m.relations) {
      CHECK(r.vec.source == pt.quiver().vertex("3"));
      CHECK(r.vec.target == pt.quiver().vertex("1"));
      CHECK(r.support.size() == 2);
    }
  }
  SUBCASE("monomial ideals have none") {
    for (const char* name : {"hhgap", "hheq", "square_mono"})
      CHECK(minimal_relation_supports(PathTable(corpus(name))).relations.empty());
  }
  SUBCASE("every output passes the literal check") {
    for (const char* name : {"ex1", "ex3", "vk", "rp2", "nosn", "sphere", "ker", "pres2"}) {
      PathTable pt(corpus(name));
      for (const auto& r : minimal_relation_supports(pt).relations)
        CHECK_MESSAGE(is_minimal_relation(pt, r.vec), std::string(name));
    }
  }
  SUBCASE("a small cap is reported") {
    PathTable pt(corpus("ex3"));
    MinimalRelationSet m = minimal_relation_supports(pt, 2);
    CHECK(m.possibly_incomplete);
    CHECK_FALSE(m.warnings.empty());
    REQUIRE(m.relations.size() == 1);
    CHECK(m.relations[0].vec.source == pt.quiver().vertex("6"));
  }
}

TEST_CASE("natural homotopy classes") {
  SUBCASE("ex1") {
    Pipeline pl(corpus("ex1"));
    CHECK_FALSE(pl.natural.same(pl.id("b"), pl.id("g")));
    CHECK(pl.natural.same(pl.id("b*a"), pl.id("g*a")));
  }
  SUBCASE("ex3 merges through paths in the ideal") {
    Pipeline pl(corpus("ex3"));
    CHECK(pl.natural.same(pl.id("beta1*gamma1"), pl.id("beta2*gamma2")));
    CHECK(pl.natural.same(pl.id("beta2*gamma2"), pl.id("beta3*gamma3")));
    CHECK(pl.pt.in_ideal(pl.id("alpha*beta1*gamma1")));
    CHECK_FALSE(pl.pt.in_ideal(pl.id("alpha*beta2*gamma2")));
    CHECK(pl.natural.same(pl.id("alpha*beta1*gamma1"), pl.id("alpha*beta2*gamma2")));
  }
  SUBCASE("arrow classes are singletons") {
    Pipeline pl(corpus("vk"));
    for (std::size_t a = 0; a < pl.pt.quiver().arrow_count(); ++a) {
      const PathClass& c = pl.natural.classes[pl.natural.class_of[pl.pt.arrow_path(a)]];
      CHECK(c.members == std::vector<std::size_t>{pl.pt.arrow_path(a)});
    }
  }
}

TEST_CASE("walk homotopy classes") {
  SUBCASE("ex1 arrows merge within walk bound 8") {
    BoundQuiver q = corpus("ex1");
    PathTable pt(q);
    MinimalRelationSet mrs = minimal_relation_supports(pt);
    PathClassTable walk = walk_homotopy_classes(pt, mrs, WalkOptions{8});
    CHECK(walk.same(path_id(pt, "b"), path_id(pt, "g")));
    CHECK(walk.depth_bound == 8);
  }
  SUBCASE("default bound is 2L+4") {
    Pipeline pl(corpus("ex1"));
    CHECK(pl.walk.depth_bound == 2 * pl.pt.bound() + 4);
    CHECK(pl.walk.same(pl.id("b"), pl.id("g")));
    CHECK_FALSE(pl.walk.caveat);
  }
  SUBCASE("nosn arrows merge in pairs") {
    Pipeline pl(corpus("nosn"));
    CHECK(pl.walk.same(pl.id("a1"), pl.id("b1")));
    CHECK(pl.walk.same(pl.id("a2"), pl.id("b2")));
    CHECK_FALSE(pl.walk.same(pl.id("a1"), pl.id("a2")));
    CHECK_FALSE(pl.natural.same(pl.id("a1"), pl.id("b1")));
  }
  SUBCASE("natural classes refine walk classes") {
    for (const char* name : {"ex1", "ex3", "nosn", "vk", "rp2", "ker", "sphere_prime"}) {
      Pipeline pl(corpus(name));
      for (std::size_t p = 0; p < pl.pt.size(); ++p)
        for (std::size_t q = p + 1; q < pl.pt.size(); ++q)
          if (pl.natural.same(p, q)) CHECK_MESSAGE(pl.walk.same(p, q), std::string(name));
    }
  }
  SUBCASE("schurian and monomial inputs have equal tables") {
    for (const char* name : {"sphere", "sphere_prime", "hhgap", "hheq", "square_mono", "rp2_cover"}) {
      Pipeline pl(corpus(name));
      CHECK_MESSAGE(pl.natural.class_of == pl.walk.class_of, std::string(name));
    }
  }
}

TEST_CASE("naturally homotopic nonzero paths are proportional in A") {
  for (const char* name : {"ex1", "rp2", "sphere", "pres1", "pres2", "ker", "hheq"}) {
    Pipeline pl(corpus(name));
    REQUIRE(std::holds_alternative<SemiNormedAlgebra>(find_semi_normed_basis(pl.pt, pl.natural)));
    for (const auto& c : pl.natural.classes) {
      std::vector<SparseVec> images;
      for (std::size_t m : c.members)
        if (pl.pt.nonzero(m)) images.push_back(pl.pt.image(m));
      if (!images.empty()) CHECK_MESSAGE(rank_of(images, pl.pt.field()) == 1, std::string(name));
    }
  }
}

TEST_CASE("fundamental group presentations") {
  SUBCASE("words spell paths left to right") {
    PathTable pt(corpus("ex1"));
    const BoundQuiver& q = pt.quiver();
    Word w = path_word(pt, path_id(pt, "b*a"));
    CHECK(w == Word{static_cast<int>(q.arrow_index("b")) + 1, static_cast<int>(q.arrow_index("a")) + 1});
  }
  SUBCASE("rp2 and vk against the oracle") {
    for (const char* name : {"rp2", "vk"}) {
      PathTable pt(corpus(name));
      GroupPresentation g = pi1_presentation(pt, minimal_relation_supports(pt));
      CHECK(g.generators.size() == pt.quiver().arrow_count());
      CHECK(abelianization(g) == invariants(oracle()[std::string(name) + "_pi1"]));
      CHECK(abelianization(simplify_presentation(g)) == abelianization(g));
    }
  }
  SUBCASE("trees give the trivial group") {
    PathTable pt(corpus("cor66_tree_star"));
    GroupPresentation g = pi1_presentation(pt, minimal_relation_supports(pt));
    CHECK(abelianization(g) == AbelianInvariants{});
    CHECK(simplify_presentation(g).generators.empty());
  }
  SUBCASE("disconnected quivers are rejected") {
    PathTable pt(parse_quiver("arrow a 1 2\narrow b 3 4\n"));
    CHECK_THROWS_AS(pi1_presentation(pt, minimal_relation_supports(pt)), NotConnected);
  }
  SUBCASE("base vertex changes the tree, not the group") {
    PathTable pt(corpus("rp2"));
    MinimalRelationSet mrs = minimal_relation_supports(pt);
    GroupPresentation g0 = pi1_presentation(pt, mrs, 0);
    GroupPresentation g2 = pi1_presentation(pt, mrs, 2);
    CHECK(g2.base == 2);
    CHECK(abelianization(g0) == abelianization(g2));
  }
}

TEST_CASE("presentation simplification") {
  SUBCASE("vk collapses to one generator squared plus a free letter") {
    PathTable pt(corpus("vk"));
    GroupPresentation s = simplify_presentation(pi1_presentation(pt, minimal_relation_supports(pt)));
    CHECK(s.generators.size() == 2);
    REQUIRE(s.relators.size() == 1);
    const Word& r = s.relators[0];
    CHECK(r.size() == 2);
    CHECK(r[0] == r[1]);
  }
  SUBCASE("trivial presentation is unchanged") {
    GroupPresentation p;
    p.generators = {"a", "b"};
    GroupPresentation s = simplify_presentation(p);
    CHECK(s.generators == p.generators);
    CHECK(s.relators.empty());
  }
  SUBCASE("free reduction then elimination") {
    GroupPresentation p;
    p.generators = {"a", "b"};
    p.relators = {Word{1, -1, 2}};
    SimplifiedPresentation s = simplify_with_map(p);
    CHECK(s.presentation.generators == std::vector<std::string>{"a"});
    CHECK(s.presentation.relators.empty());
    CHECK(s.image[1].empty());
  }
  SUBCASE("words and canonical forms") {
    CHECK(free_reduce(Word{1, 2, -2, -1, 3}) == Word{3});
    CHECK(cyclic_reduce(Word{-1, 2, 3, 1}) == Word{2, 3});
    CHECK(cyclic_canonical(Word{2, 1}) == cyclic_canonical(Word{-1, -2}));
    CHECK(inverse(Word{1, -2}) == Word{2, -1});
    GroupPresentation p;
    p.generators = {"a", "b"};
    CHECK(p.format(Word{1, -2}) == "a b^-1");
    CHECK(p.format(Word{}) == "1");
  }
  SUBCASE("abelianization of free groups") {
    GroupPresentation p;
    p.generators = {"a", "b", "c"};
    CHECK(abelianization(p) == AbelianInvariants{3, {}});
    CHECK(AbelianInvariants{1, {2}}.to_string() == "Z + Z/2");
  }
}

TEST_CASE("van Kampen") {
  SUBCASE("vk split") {
    PathTable pt(corpus("vk"));
    const BoundQuiver& q = pt.quiver();
    MinimalRelationSet mrs = minimal_relation_supports(pt);
    VanKampenResult vk =
        van_kampen_pushout(pt, mrs, vertex_set(q, {"2", "3", "4", "5", "6"}), vertex_set(q, {"1", "2", "3"}));
    CHECK(abelianization(vk.q1) == AbelianInvariants{2, {}});
    CHECK(abelianization(vk.q2) == AbelianInvariants{0, {2}});
    CHECK(abelianization(vk.q0) == AbelianInvariants{1, {}});
    CHECK(abelianization(vk.pushout) == invariants(oracle()["vk_pi1"]));
    CHECK(vk.v0 == vertex_set(q, {"2", "3"}));
  }
  SUBCASE("degenerate split recovers the whole group") {
    PathTable pt(corpus("vk"));
    MinimalRelationSet mrs = minimal_relation_supports(pt);
    std::vector<std::size_t> all(pt.quiver().vertex_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    VanKampenResult vk = van_kampen_pushout(pt, mrs, {0}, all);
    CHECK(abelianization(vk.q1) == AbelianInvariants{});
    CHECK(abelianization(vk.pushout) == abelianization(pi1_presentation(pt, mrs)));
  }
  SUBCASE("two triangles sharing an edge") {
    BoundQuiver q = corpus("cor66_cycle_triangles");
    q.add_relation(RelVector{q.vertex("1"), q.vertex("3"), {{q.path_from_names({"a", "b"}), Rational(1)}}});
    PathTable pt(q);
    MinimalRelationSet mrs = minimal_relation_supports(pt);
    const auto& o = oracle()["two_triangles"];
    VanKampenResult vk =
        van_kampen_pushout(pt, mrs, vertex_set(q, {"1", "2", "3"}), vertex_set(q, {"2", "3", "4"}));
    CHECK(abelianization(vk.q1).rank == o["q1"].get<std::size_t>());
    CHECK(abelianization(vk.q2).rank == o["q2"].get<std::size_t>());
    CHECK(abelianization(vk.q0).rank == o["q0"].get<std::size_t>());
    CHECK(abelianization(vk.pushout) == AbelianInvariants{o["whole"].get<std::size_t>(), {}});
    CHECK(abelianization(pi1_presentation(pt, mrs)).rank == o["whole"].get<std::size_t>());
  }
  SUBCASE("hypotheses are checked") {
    PathTable pt(corpus("vk"));
    const BoundQuiver& q = pt.quiver();
    MinimalRelationSet mrs = minimal_relation_supports(pt);
    CHECK_THROWS_AS(van_kampen_pushout(pt, mrs, vertex_set(q, {"4", "5", "6"}), vertex_set(q, {"1", "2", "3"})),
                    HypothesisViolated);
    // the nonzero path a1*a2 from 3 to 1 leaves both halves
    CHECK_THROWS_AS(van_kampen_pushout(pt, mrs, vertex_set(q, {"2", "3", "4", "5", "6"}),
                                       vertex_set(q, {"1", "2"})),
                    HypothesisViolated);
  }
}

TEST_CASE("hurewicz on the corpus") {
  for (const char* name : {"ex1", "ex3", "rp2", "vk", "nosn", "sphere", "pres2", "ker"}) {
    Pipeline pl(corpus(name));
    AbelianInvariants ab = abelianization(pi1_presentation(pl.pt, pl.mrs));
    Groups h = integral_homology(pl.cx);
    std::vector<long> t;
    for (const auto& d : ab.torsion) t.push_back(d.get_si());
    Groups::value_type expected(ab.rank, t);
    CHECK_MESSAGE(h.at(1) == expected, std::string(name));
  }
}
