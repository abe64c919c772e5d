#include "bqtop/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "bqtop/algcohom.hpp"
#include "bqtop/covering.hpp"
#include "bqtop/dsl.hpp"
#include "bqtop/properties.hpp"

namespace bqtop {

namespace {

using Json = nlohmann::ordered_json;
constexpr std::size_t kAll = static_cast<std::size_t>(-1);

struct Config {
  std::size_t path_cap = 32;
  std::size_t walk_bound = 0;
  std::size_t support_cap = 8;
  std::string out_file;
};

/// Lazily built pipeline for one bound quiver.
class Analysis {
 public:
  Analysis(BoundQuiver q, const Config& cfg)
      : table_(std::move(q), PathTableOptions{cfg.path_cap}),
        mrs_(minimal_relation_supports(table_, cfg.support_cap)),
        cfg_(cfg) {}

  const PathTable& table() const { return table_; }
  const BoundQuiver& quiver() const { return table_.quiver(); }
  const MinimalRelationSet& relations() const { return mrs_; }

  const PathClassTable& natural() {
    if (!natural_) natural_ = natural_homotopy_classes(table_, mrs_);
    return *natural_;
  }
  const PathClassTable& walk() {
    if (!walk_) {
      WalkOptions opts;
      opts.depth_bound = cfg_.walk_bound;
      walk_ = walk_homotopy_classes(table_, mrs_, natural(), opts);
    }
    return *walk_;
  }
  const PathClassTable& classes(bool sharp) { return sharp ? walk() : natural(); }
  const CellComplex& complex(bool sharp) {
    auto& slot = sharp ? sharp_ : cx_;
    if (!slot) slot = build_complex(table_, classes(sharp));
    return *slot;
  }

  Json caveats() const {
    Json c;
    c["walk_bound_truncated"] = walk_ && walk_->caveat;
    c["natural_closure_truncated"] = natural_ && natural_->truncated;
    c["support_cap_incomplete"] = mrs_.possibly_incomplete;
    c["warnings"] = mrs_.warnings;
    if (basis_checked_) c["no_semi_normed_basis"] = !has_basis_;
    return c;
  }

  // cells of B are only known to be representative independent with a basis
  void check_basis() {
    has_basis_ = std::holds_alternative<SemiNormedAlgebra>(find_semi_normed_basis(table_, natural()));
    basis_checked_ = true;
  }

 private:
  PathTable table_;
  MinimalRelationSet mrs_;
  Config cfg_;
  std::optional<PathClassTable> natural_;
  std::optional<PathClassTable> walk_;
  std::optional<CellComplex> cx_;
  std::optional<CellComplex> sharp_;
  bool basis_checked_ = false;
  bool has_basis_ = false;
};

Json big(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json group_json(const DegreeGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(big(d));
  return Json::array({g.rank, t});
}

Json homology_json(const HomologyResult& h) {
  Json j;
  j["coefficients"] = h.coeff.name();
  Json groups = Json::object();
  for (std::size_t n = 0; n < h.groups.size(); ++n)
    groups[(h.cohomology ? "H^" : "H") + std::to_string(n)] = group_json(h.groups[n]);
  j["groups"] = groups;
  return j;
}

Json abelian_json(const AbelianInvariants& a) {
  Json t = Json::array();
  for (const auto& d : a.torsion) t.push_back(big(d));
  return Json{{"rank", a.rank}, {"torsion", t}, {"group", a.to_string()}};
}

Json presentation_json(const GroupPresentation& p, bool with_abelian) {
  Json j;
  j["generators"] = p.generators;
  j["relators"] = p.formatted_relators();
  if (with_abelian) j["abelianization"] = abelian_json(abelianization(p));
  return j;
}

Json quiver_json(const std::string& file, const BoundQuiver& q) {
  Json j;
  j["file"] = std::filesystem::path(file).filename().string();
  j["field"] = q.field().name();
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back(Json::array({a.name, q.vertex_name(a.source), q.vertex_name(a.target)}));
  j["arrows"] = arrows;
  Json rels = Json::array();
  for (const auto& r : q.relations()) rels.push_back(relation_string(q, r));
  j["relations"] = rels;
  return j;
}

std::vector<std::string> vertex_names(const BoundQuiver& q, const std::vector<std::size_t>& vs) {
  std::vector<std::string> out;
  for (std::size_t v : vs) out.push_back(q.vertex_name(v));
  return out;
}

BoundQuiver load_quiver(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_quiver(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ":" + e.what());
  }
}

template <class F>
auto load_with(const std::string& path, F&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ":" + e.what());
  }
}

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long n = std::stoul(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw Error("InvalidEnvironment", std::string(name) + " must be a non-negative integer");
  }
}

std::vector<std::size_t> pad(std::vector<std::size_t> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

Coefficients field_coefficients(const Field& k) {
  return k.is_rational() ? Coefficients::rationals() : Coefficients::prime(k.characteristic());
}

struct Outcome {
  Json result;
  int code = kExitOk;
};

Outcome cmd_check(Analysis& an) {
  AlgebraProperties p = algebra_properties(an.table());
  Json r;
  r["admissible"] = p.admissible;
  r["connected"] = p.connected;
  r["triangular"] = p.triangular;
  r["almost_triangular"] = p.almost_triangular;
  r["schurian"] = p.schurian;
  r["semi_commutative"] = p.semi_commutative;
  r["constricted"] = p.constricted;
  r["monomial"] = p.monomial;
  r["nilpotency_bound"] = p.nilpotency_bound;
  r["euler_characteristic"] = p.euler_characteristic;
  r["dimension"] = p.dimension;
  r["dims"] = p.dims;
  Json mins = Json::array();
  for (const auto& m : an.relations().relations)
    mins.push_back(relation_string(an.quiver(), m.vec));
  r["minimal_relations"] = mins;
  return {r};
}

Outcome cmd_cells(Analysis& an, bool sharp, std::optional<std::size_t> max_dim) {
  const PathClassTable& ct = an.classes(sharp);
  CellComplex local;
  const CellComplex* cx = &local;
  if (max_dim)
    local = build_complex(an.table(), ct, *max_dim);
  else
    cx = &an.complex(sharp);
  Json r;
  r["complex"] = sharp ? "sharp" : "natural";
  r["counts"] = cx->counts();
  r["euler_characteristic"] = cx->chain().euler_characteristic();
  Json classes = Json::array();
  for (const auto& c : ct.classes) {
    if (!c.nonzero || c.identity) continue;
    std::vector<std::string> members;
    for (std::size_t m : c.members)
      if (an.table().nonzero(m)) members.push_back(an.table().name(m));
    classes.push_back(Json{{"representative", an.table().name(c.representative)},
                           {"members", members}});
  }
  r["classes"] = classes;
  Json cells = Json::object();
  for (std::size_t n = 0; n < cx->cells.size(); ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < cx->cells[n].size(); ++i)
      labels.push_back(cx->label(an.table(), ct, n, i));
    cells[std::to_string(n)] = labels;
  }
  r["cells"] = cells;
  return {r};
}

Outcome cmd_homology(Analysis& an, bool co, const std::string& coeff, bool sharp) {
  Coefficients c = Coefficients::parse(coeff);
  ChainComplex ch = an.complex(sharp).chain();
  Json r = homology_json(co ? cohomology(ch, c) : homology(ch, c));
  r["complex"] = sharp ? "sharp" : "natural";
  return {r};
}

std::size_t vertex_arg(const BoundQuiver& q, const std::string& name) {
  if (!q.has_vertex(name)) throw MalformedQuiver("unknown vertex '" + name + "'");
  return q.vertex(name);
}

Outcome cmd_pi1(Analysis& an, const std::string& base, bool simplify, bool abelian) {
  std::size_t b = base.empty() ? 0 : vertex_arg(an.quiver(), base);
  GroupPresentation p = pi1_presentation(an.table(), an.relations(), b);
  Json r;
  r["base"] = an.quiver().vertex_name(b);
  r["presentation"] = presentation_json(p, false);
  std::vector<std::string> tree;
  for (std::size_t t : p.tree) tree.push_back(p.generators[t]);
  r["presentation"]["tree"] = tree;
  if (simplify) r["simplified"] = presentation_json(simplify_presentation(p), false);
  if (abelian) r["abelianization"] = abelian_json(abelianization(p));
  return {r};
}

Outcome cmd_vankampen(Analysis& an, const std::vector<std::string>& v1,
                      const std::vector<std::string>& v2) {
  std::vector<std::size_t> a, b;
  for (const auto& n : v1) a.push_back(vertex_arg(an.quiver(), n));
  for (const auto& n : v2) b.push_back(vertex_arg(an.quiver(), n));
  VanKampenResult vk = van_kampen_pushout(an.table(), an.relations(), a, b);
  const BoundQuiver& q = an.quiver();
  Json r;
  r["v1"] = vertex_names(q, vk.v1);
  r["v2"] = vertex_names(q, vk.v2);
  r["v0"] = vertex_names(q, vk.v0);
  r["q1"] = presentation_json(vk.q1, true);
  r["q2"] = presentation_json(vk.q2, true);
  r["q0"] = presentation_json(vk.q0, true);
  r["pushout"] = presentation_json(vk.pushout, true);
  r["pushout"]["simplified"] = presentation_json(simplify_presentation(vk.pushout), false);
  GroupPresentation whole = pi1_presentation(an.table(), an.relations(), vk.pushout.base);
  r["pi1_abelianization"] = abelian_json(abelianization(whole));
  r["agrees"] = abelianization(whole) == abelianization(vk.pushout);
  return {r};
}

Json failure_json(const SemiNormedFailure& f) {
  return Json{{"semi_normed_basis", false}, {"reason", f.reason}, {"witness", f.witness}};
}

Json basis_json(const SemiNormedAlgebra& A) {
  Json b = Json::array();
  for (std::size_t i = 0; i < A.basis.size(); ++i) {
    const BasisElement& e = A.basis[i];
    b.push_back(Json{{"name", A.name(i)},
                     {"source", A.table->quiver().vertex_name(e.source)},
                     {"target", A.table->quiver().vertex_name(e.target)},
                     {"scale", e.scale.to_string()}});
  }
  return b;
}

Outcome cmd_simplicial(Analysis& an) {
  SemiNormedResult res = find_semi_normed_basis(an.table(), an.natural());
  if (auto* f = std::get_if<SemiNormedFailure>(&res)) return {failure_json(*f), kExitVerdict};
  const SemiNormedAlgebra& A = std::get<SemiNormedAlgebra>(res);
  SimplicialComplexSC sc = simplicial_complex(A);
  ComparisonReport cmp = phi_psi_maps(A, sc, an.natural(), an.complex(false), an.walk(),
                                      an.complex(true));
  Json r;
  r["semi_normed_basis"] = true;
  r["basis"] = basis_json(A);
  r["counts"] = sc.faces.counts;
  r["homology"] = homology_json(homology(sc.chain(), Coefficients::integers()));
  r["cell_homology"] = homology_json(homology(an.complex(false).chain(), Coefficients::integers()));
  Json c;
  c["phi_chain"] = cmp.phi_chain;
  c["psi_well_defined"] = cmp.psi_well_defined;
  c["psi_chain"] = cmp.psi_chain;
  c["phi_psi_identity"] = cmp.phi_psi_identity;
  c["psi_phi_identity"] = cmp.psi_phi_identity;
  c["phi_sharp_onto"] = cmp.phi_sharp_onto;
  c["phi_sharp_chain"] = cmp.phi_sharp_chain;
  c["phi_sharp_kernel_ranks"] = cmp.kernel_ranks;
  c["failures"] = cmp.failures;
  r["comparison"] = c;
  return {r, cmp.ok() ? kExitOk : kExitVerdict};
}

Outcome cmd_hochschild(Analysis& an) {
  SemiNormedResult res = find_semi_normed_basis(an.table(), an.natural());
  if (auto* f = std::get_if<SemiNormedFailure>(&res)) return {failure_json(*f), kExitVerdict};
  const SemiNormedAlgebra& A = std::get<SemiNormedAlgebra>(res);
  HochschildComplex hc = hochschild_complex(A);
  Json r;
  r["field"] = A.field.name();
  std::vector<std::size_t> sizes;
  for (const auto& b : hc.basis) sizes.push_back(b.size());
  r["cochain_dims"] = sizes;
  r["dims"] = hc.dims();
  return {r};
}

Outcome cmd_compare(Analysis& an) {
  SemiNormedResult res = find_semi_normed_basis(an.table(), an.natural());
  if (auto* f = std::get_if<SemiNormedFailure>(&res)) return {failure_json(*f), kExitVerdict};
  const SemiNormedAlgebra& A = std::get<SemiNormedAlgebra>(res);
  SimplicialComplexSC sc = simplicial_complex(A);
  HochschildComplex hc = hochschild_complex(A);
  EpsilonMuReport em = epsilon_mu(A, sc, hc);
  ComparisonReport cmp = phi_psi_maps(A, sc, an.natural(), an.complex(false), an.walk(),
                                      an.complex(true));
  HomologyResult hb = cohomology(an.complex(false).chain(), field_coefficients(A.field));
  std::vector<std::size_t> hb_dims = hb.ranks();
  std::size_t len = std::max({em.sh_dims.size(), em.hh_dims.size(), hb_dims.size()});
  Json r;
  r["field"] = A.field.name();
  r["SH"] = pad(em.sh_dims, len);
  r["HB"] = pad(hb_dims, len);
  r["HH"] = pad(em.hh_dims, len);
  r["epsilon_iso"] = em.iso_all();
  r["schurian"] = em.schurian;
  r["semi_commutative"] = em.semi_commutative;
  r["injective"] = em.injective;
  r["surjective"] = em.surjective;
  r["image_ranks"] = em.image_ranks;
  r["mu_epsilon_identity"] = em.mu_epsilon_identity;
  r["epsilon_chain"] = em.epsilon_chain;
  r["mu_chain"] = em.mu_chain ? Json(*em.mu_chain) : Json();
  r["epsilon_mu_identity"] = em.epsilon_mu_identity ? Json(*em.epsilon_mu_identity) : Json();
  r["phi_psi_iso"] = cmp.ok();
  r["phi_sharp_kernel_ranks"] = cmp.kernel_ranks;
  bool ok = em.mu_epsilon_identity && em.epsilon_chain && em.mu_chain.value_or(true) &&
            em.epsilon_mu_identity.value_or(true) && cmp.ok();
  return {r, ok ? kExitOk : kExitVerdict};
}

Json covering_json(const CoveringReport& c) {
  Json j;
  j["well_formed"] = c.well_formed;
  j["fibers_nonempty"] = c.fibers_nonempty;
  j["local_bijections"] = c.local_bijections;
  j["ideal_preserved"] = c.ideal_preserved;
  j["relations_lift"] = c.relations_lift;
  j["lifts_checked"] = c.lifts_checked;
  j["fiber_sizes"] = c.fiber_sizes;
  j["covering"] = c.covering;
  if (c.galois_checked) {
    Json g;
    g["group_order"] = c.group_order;
    g["group_axioms"] = c.group_axioms;
    g["preserves_ideal"] = c.group_preserves_ideal;
    g["commutes_with_projection"] = c.commutes_with_p;
    g["transitive_on_vertices"] = c.transitive_vertices;
    g["transitive_on_arrows"] = c.transitive_arrows;
    g["fixed_point_free"] = c.fixed_point_free;
    g["galois"] = c.galois;
    j["galois"] = g;
  }
  j["witnesses"] = c.witnesses;
  return j;
}

Outcome cmd_cover(Analysis& base, Analysis& cover, const QuiverMorphism& p,
                  const std::optional<GroupAction>& g) {
  CoveringReport rep = g ? check_galois(base.table(), cover.table(), p, *g)
                         : check_covering(base.table(), cover.table(), p);
  Json r;
  r["covering"] = covering_json(rep);
  bool ok = rep.covering && (!g || rep.galois);
  if (rep.covering) {
    ComplexData bd{&base.table(), &base.natural(), &base.complex(false)};
    ComplexData cd{&cover.table(), &cover.natural(), &cover.complex(false)};
    CellMapReport cm = lift_complex_map(bd, cd, p);
    Json c;
    c["classes_compatible"] = cm.classes_compatible;
    c["faces_commute"] = cm.faces_commute;
    c["local_bijection"] = cm.local_bijection;
    c["fiber_sizes"] = cm.fiber_sizes;
    auto u = cm.uniform_fiber();
    c["uniform_fiber"] = u ? Json(*u) : Json();
    c["witnesses"] = cm.witnesses;
    r["cell_map"] = c;
    ok = ok && cm.ok();
    if (g && rep.galois) {
      DeckReport d = deck_group(bd, cd, p, *g);
      Json dj;
      dj["order"] = d.order;
      dj["automorphisms"] = d.automorphisms;
      dj["compatible"] = d.compatible;
      dj["distinct"] = d.distinct;
      dj["transitive"] = d.transitive;
      dj["witnesses"] = d.witnesses;
      r["deck_group"] = dj;
      ok = ok && d.ok();
    }
    ChainComplex bc = base.complex(false).chain();
    ChainComplex cc = cover.complex(false).chain();
    r["base_homology"] = homology_json(homology(bc, Coefficients::integers()));
    r["cover_homology"] = homology_json(homology(cc, Coefficients::integers()));
    r["euler_characteristic"] = Json{{"base", bc.euler_characteristic()},
                                     {"cover", cc.euler_characteristic()}};
  }
  return {r, ok ? kExitOk : kExitVerdict};
}

std::string dot_text(Analysis& an, bool skeleton) {
  const BoundQuiver& q = an.quiver();
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    std::string r = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r + "\"";
  };
  out << "digraph " << (skeleton ? "skeleton" : "quiver") << " {\n";
  for (const auto& v : q.vertices()) out << "  " << quote(v) << ";\n";
  if (!skeleton) {
    for (const auto& a : q.arrows())
      out << "  " << quote(q.vertex_name(a.source)) << " -> " << quote(q.vertex_name(a.target))
          << " [label=" << quote(a.name) << "];\n";
  } else {
    const CellComplex& cx = an.complex(false);
    if (cx.cells.size() > 1)
      for (std::size_t i = 0; i < cx.cells[1].size(); ++i) {
        const Path& w = an.table().path(cx.cells[1][i].witness);
        out << "  " << quote(q.vertex_name(w.source)) << " -> " << quote(q.vertex_name(w.target))
            << " [label=" << quote(cx.label(an.table(), an.natural(), 1, i)) << "];\n";
      }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological invariants of bound quivers", "bqtop"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Config cfg;
  auto* walk_opt = app.add_option("--walk-bound", cfg.walk_bound, "walk search length bound");
  app.add_option("--support-cap", cfg.support_cap, "largest minimal relation support searched");
  auto* cap_opt = app.add_option("--path-cap", cfg.path_cap, "longest path length enumerated");
  app.add_option("--out", cfg.out_file, "write the report to FILE");

  std::string file;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "bound quiver (.bq)")->required();
    sub->fallthrough();
    return sub;
  };

  auto* check = with_file(app.add_subcommand("check", "algebra properties"));
  bool sharp = false;
  std::optional<std::size_t> max_dim;
  auto* cells = with_file(app.add_subcommand("cells", "cells of the classifying space"));
  cells->add_flag("--sharp", sharp, "use walk homotopy classes");
  cells->add_option("--max-dim", max_dim, "highest dimension");
  std::string coeff = "Z";
  auto* hom = with_file(app.add_subcommand("homology", "cellular homology"));
  auto* cohom = with_file(app.add_subcommand("cohomology", "cellular cohomology"));
  for (auto* s : {hom, cohom}) {
    s->add_option("--coeff", coeff, "Z, Q, Fp:<p> or Zmod:<m>");
    s->add_flag("--sharp", sharp, "use walk homotopy classes");
  }
  std::string base;
  bool simplify = false, abelian = false;
  auto* pi1 = with_file(app.add_subcommand("pi1", "fundamental group presentation"));
  pi1->add_option("--base", base, "base vertex");
  pi1->add_flag("--simplify", simplify, "apply Tietze simplification");
  pi1->add_flag("--abelianization", abelian, "report the abelianization");
  std::vector<std::string> v1, v2;
  auto* vk = with_file(app.add_subcommand("vankampen", "pushout of two full subquivers"));
  vk->add_option("--v1", v1, "vertices of the first subquiver")->required()->delimiter(',');
  vk->add_option("--v2", v2, "vertices of the second subquiver")->required()->delimiter(',');
  auto* simp = with_file(app.add_subcommand("simplicial", "simplicial complex of a semi-normed basis"));
  std::string field;
  auto* hoch = with_file(app.add_subcommand("hochschild", "Hochschild cohomology"));
  auto* cmp = with_file(app.add_subcommand("compare", "simplicial, cellular and Hochschild cohomology"));
  for (auto* s : {hoch, cmp}) s->add_option("--field", field, "Q or Fp:<p>");
  bool skeleton = false;
  auto* dot = with_file(app.add_subcommand("dot", "Graphviz export"));
  dot->add_flag("--skeleton", skeleton, "draw the 1-skeleton instead of the quiver");
  auto* cover = app.add_subcommand("cover", "covering morphisms");
  cover->require_subcommand(1);
  std::string cover_file, morphism_file, group_file;
  auto* verify = cover->add_subcommand("verify", "check a covering and optional Galois group");
  verify->add_option("base", file, "base quiver")->required();
  verify->add_option("cover", cover_file, "cover quiver")->required();
  verify->add_option("morphism", morphism_file, "vmap/amap file from cover to base")->required();
  verify->add_option("--galois", group_file, "group action file");
  cover->fallthrough();
  verify->fallthrough();

  std::vector<const char*> argv{"bqtop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cap_opt->count() == 0) cfg.path_cap = env_or("BQTOP_PATH_CAP", cfg.path_cap);
    if (walk_opt->count() == 0) cfg.walk_bound = env_or("BQTOP_WALK_BOUND", cfg.walk_bound);

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool_version"] = kToolVersion;
    Json options;
    options["path_cap"] = cfg.path_cap;
    options["walk_bound"] = cfg.walk_bound;
    options["support_cap"] = cfg.support_cap;
    Outcome o;
    std::optional<std::string> text;

    if (verify->parsed()) {
      doc["command"] = "cover verify";
      BoundQuiver bq = load_quiver(file);
      BoundQuiver cq = load_quiver(cover_file);
      QuiverMorphism p =
          load_with(morphism_file, [&](const std::string& t) { return parse_morphism(t, cq, bq); });
      std::optional<GroupAction> g;
      if (!group_file.empty())
        g = load_with(group_file, [&](const std::string& t) { return parse_group(t, cq); });
      Analysis ba(bq, cfg);
      Analysis ca(cq, cfg);
      doc["input"] = Json{{"base", quiver_json(file, bq)},
                          {"cover", quiver_json(cover_file, cq)},
                          {"morphism", std::filesystem::path(morphism_file).filename().string()}};
      if (g) doc["input"]["group"] = std::filesystem::path(group_file).filename().string();
      doc["options"] = options;
      o = cmd_cover(ba, ca, p, g);
      doc["result"] = o.result;
      Json cav = ba.caveats();
      cav["cover"] = ca.caveats();
      doc["caveats"] = cav;
    } else {
      BoundQuiver q = load_quiver(file);
      if (!field.empty()) q.set_field(Field::parse(field));
      Analysis an(q, cfg);
      const std::string name = app.get_subcommands().front()->get_name();
      doc["command"] = name;
      doc["input"] = quiver_json(file, an.quiver());
      if (check->parsed()) {
        o = cmd_check(an);
        doc["input"]["path_bound"] = an.table().bound();
      } else if (cells->parsed()) {
        an.check_basis();
        options["sharp"] = sharp;
        if (max_dim) options["max_dim"] = *max_dim;
        o = cmd_cells(an, sharp, max_dim);
      } else if (hom->parsed() || cohom->parsed()) {
        an.check_basis();
        options["sharp"] = sharp;
        options["coeff"] = coeff;
        o = cmd_homology(an, cohom->parsed(), coeff, sharp);
      } else if (pi1->parsed()) {
        o = cmd_pi1(an, base, simplify, abelian);
      } else if (vk->parsed()) {
        o = cmd_vankampen(an, v1, v2);
      } else if (simp->parsed()) {
        o = cmd_simplicial(an);
      } else if (hoch->parsed()) {
        o = cmd_hochschild(an);
      } else if (cmp->parsed()) {
        o = cmd_compare(an);
      } else if (dot->parsed()) {
        text = dot_text(an, skeleton);
      }
      doc["options"] = options;
      doc["result"] = o.result;
      doc["caveats"] = an.caveats();
    }

    std::string rendered = text ? *text : doc.dump(2) + "\n";
    if (cfg.out_file.empty()) {
      out << rendered;
    } else {
      std::ofstream f(cfg.out_file, std::ios::binary);
      if (!f) throw Error("IOError", "cannot write '" + cfg.out_file + "'");
      f << rendered;
    }
    return o.code;
  } catch (const Error& e) {
    err << "bqtop: " << e.kind() << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const CLI::Error& e) {
    err << "bqtop: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "bqtop: InvalidArgument: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace bqtop
