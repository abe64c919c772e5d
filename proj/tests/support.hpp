#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bqtop/algcohom.hpp"
#include "bqtop/cli.hpp"
#include "bqtop/covering.hpp"
#include "bqtop/dsl.hpp"
#include "bqtop/properties.hpp"
#include "bqtop/snf.hpp"

namespace bqtest {

using namespace bqtop;

inline std::string corpus_path(const std::string& file) {
  return std::string(BQTOP_CORPUS_DIR) + "/" + file;
}

inline BoundQuiver corpus(const std::string& name) {
  return parse_quiver(read_file(corpus_path(name + ".bq")));
}

inline const nlohmann::json& oracle() {
  static const nlohmann::json j = nlohmann::json::parse(read_file(BQTOP_ORACLE_FILE));
  return j;
}

/// Path id from "b*a" or "e_x".
inline std::size_t path_id(const PathTable& pt, const std::string& text) {
  const BoundQuiver& q = pt.quiver();
  if (text.rfind("e_", 0) == 0) return pt.stationary(q.vertex(text.substr(2)));
  std::vector<std::string> names;
  std::stringstream s(text);
  for (std::string part; std::getline(s, part, '*');) names.push_back(part);
  auto id = pt.find(q.path_from_names(names));
  if (!id) throw std::runtime_error("path " + text + " is longer than L");
  return *id;
}

inline RelVector relvec(const PathTable& pt, std::vector<std::pair<std::string, long>> terms) {
  RelVector v;
  for (const auto& [name, c] : terms) {
    const Path& p = pt.path(path_id(pt, name));
    v.source = p.source;
    v.target = p.target;
    v.terms[p] += c;
  }
  return v;
}

/// The whole pipeline for one bound quiver.
struct Pipeline {
  PathTable pt;
  MinimalRelationSet mrs;
  PathClassTable natural;
  PathClassTable walk;
  CellComplex cx;
  CellComplex sharp;

  explicit Pipeline(BoundQuiver q, WalkOptions w = {})
      : pt(std::move(q)),
        mrs(minimal_relation_supports(pt)),
        natural(natural_homotopy_classes(pt, mrs)),
        walk(walk_homotopy_classes(pt, mrs, natural, w)),
        cx(build_complex(pt, natural)),
        sharp(build_complex(pt, walk)) {}

  std::size_t id(const std::string& text) const { return path_id(pt, text); }
  ComplexData data() const { return {&pt, &natural, &cx}; }
};

using Groups = std::vector<std::pair<std::size_t, std::vector<long>>>;

inline Groups groups(const HomologyResult& h) {
  Groups out;
  for (const auto& g : h.groups) {
    std::vector<long> t;
    for (const auto& d : g.torsion) t.push_back(d.get_si());
    out.emplace_back(g.rank, t);
  }
  return out;
}

inline Groups integral_homology(const CellComplex& cx) {
  return groups(homology(cx.chain(), Coefficients::integers()));
}

inline Groups from_json(const nlohmann::json& j) {
  Groups out;
  for (const auto& g : j) out.emplace_back(g[0].get<std::size_t>(), g[1].get<std::vector<long>>());
  return out;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::ordered_json json() const { return nlohmann::ordered_json::parse(out); }
};

inline CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace bqtest
