#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "bqtop/quiver.hpp"

namespace bqtest {

enum class IdealShape { monomial, commutative, incidence, mixed };

/// Every path of length >= 2 in an acyclic quiver, arrows left to right.
inline std::vector<bqtop::Path> long_paths(const bqtop::BoundQuiver& q) {
  std::vector<bqtop::Path> out;
  std::vector<bqtop::Path> frontier;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    frontier.push_back({q.arrow(a).source, q.arrow(a).target, {a}});
  while (!frontier.empty()) {
    std::vector<bqtop::Path> next;
    for (const auto& p : frontier)
      for (std::size_t a : q.out_arrows(p.target)) {
        bqtop::Path r = p;
        r.arrows.push_back(a);
        r.target = q.arrow(a).target;
        out.push_back(r);
        next.push_back(r);
      }
    frontier = std::move(next);
  }
  return out;
}

/// Random connected acyclic bound quiver on at most max_vertices vertices.
/// Arrows always go from a lower to a higher vertex index.
inline bqtop::BoundQuiver random_bound_quiver(std::mt19937_64& rng, IdealShape shape,
                                              std::size_t max_vertices = 6) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  bqtop::BoundQuiver q;
  std::size_t n = pick(2, max_vertices);
  for (std::size_t v = 0; v < n; ++v) q.add_vertex("v" + std::to_string(v));
  std::size_t arrows = 0;
  auto arrow = [&](std::size_t s, std::size_t t) {
    q.add_arrow("x" + std::to_string(arrows++), "v" + std::to_string(s), "v" + std::to_string(t));
  };
  for (std::size_t v = 1; v < n; ++v) arrow(pick(0, v - 1), v);
  std::size_t extra = pick(0, n - 1);
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t s = pick(0, n - 2);
    std::size_t t = pick(s + 1, n - 1);
    arrow(s, t);
  }

  auto paths = long_paths(q);
  auto add = [&](std::map<bqtop::Path, bqtop::Rational> terms) {
    if (terms.empty()) return;
    bqtop::RelVector r{terms.begin()->first.source, terms.begin()->first.target, std::move(terms)};
    q.add_relation(std::move(r));
  };

  if (shape == IdealShape::mixed) {
    std::size_t s = pick(0, 2);
    shape = s == 0 ? IdealShape::monomial : s == 1 ? IdealShape::commutative : IdealShape::incidence;
  }
  if (shape == IdealShape::monomial) {
    for (const auto& p : paths)
      if (coin(0.3)) add({{p, 1}});
    return q;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<bqtop::Path>> parallel;
  for (const auto& p : paths) parallel[{p.source, p.target}].push_back(p);
  if (shape == IdealShape::incidence) {
    // identify every pair of parallel paths of length >= 2; arrows stay free
    for (auto& [pair, ps] : parallel)
      for (std::size_t j = 1; j < ps.size(); ++j) add({{ps[0], 1}, {ps[j], -1}});
    return q;
  }
  for (auto& [pair, ps] : parallel) {
    if (ps.size() >= 2 && coin(0.6)) {
      std::size_t i = pick(0, ps.size() - 1);
      std::size_t j = pick(0, ps.size() - 2);
      if (j >= i) ++j;
      long c = coin(0.7) ? -1 : (coin(0.5) ? 2 : -2);
      add({{ps[i], 1}, {ps[j], c}});
    }
    for (const auto& p : ps)
      if (coin(0.15)) add({{p, 1}});
  }
  return q;
}

}  // namespace bqtest
