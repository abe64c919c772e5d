#include "bqtop/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bqtop/snf.hpp"

namespace bqtop {

std::size_t FaceComplex::front(std::size_t n, std::size_t cell, std::size_t p) const {
  while (n > p) {
    cell = faces[n][cell][n];
    --n;
  }
  return cell;
}

std::size_t FaceComplex::back(std::size_t n, std::size_t cell, std::size_t q) const {
  while (n > q) {
    cell = faces[n][cell][0];
    --n;
  }
  return cell;
}

bool FaceComplex::simplicial_identities(std::string* witness) const {
  for (std::size_t n = 2; n < counts.size(); ++n)
    for (std::size_t c = 0; c < counts[n]; ++c)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          std::size_t lhs = faces[n - 1][faces[n][c][j]][i];
          std::size_t rhs = faces[n - 1][faces[n][c][i]][j - 1];
          if (lhs != rhs) {
            if (witness != nullptr)
              *witness = "cell " + std::to_string(c) + " of dimension " + std::to_string(n) +
                         ", faces " + std::to_string(i) + "," + std::to_string(j);
            return false;
          }
        }
  return true;
}

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t n = 0; n < ranks.size(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(ranks[n]);
  return chi;
}

bool ChainComplex::squares_to_zero() const {
  for (std::size_t n = 2; n < boundary.size(); ++n) {
    const auto& hi = boundary[n];
    const auto& lo = boundary[n - 1];
    for (const auto& col : hi.columns) {
      std::map<std::size_t, BigInt> acc;
      for (const auto& [mid, v] : col)
        for (const auto& [r, w] : lo.columns[mid]) acc[r] += v * w;
      for (const auto& [r, v] : acc)
        if (sgn(v) != 0) return false;
    }
  }
  return true;
}

ChainComplex chain_complex(const FaceComplex& fc) {
  ChainComplex cx;
  cx.ranks = fc.counts;
  cx.boundary.resize(fc.counts.size());
  if (!fc.counts.empty()) cx.boundary[0].rows = 0;
  for (std::size_t n = 1; n < fc.counts.size(); ++n) {
    SparseIntMatrix& m = cx.boundary[n];
    m.rows = fc.counts[n - 1];
    m.columns.resize(fc.counts[n]);
    for (std::size_t c = 0; c < fc.counts[n]; ++c) {
      std::map<std::size_t, BigInt> acc;
      for (std::size_t i = 0; i <= n; ++i) acc[fc.faces[n][c][i]] += (i % 2 == 0 ? 1 : -1);
      for (auto& [r, v] : acc)
        if (sgn(v) != 0) m.columns[c].emplace_back(r, v);
    }
  }
  return cx;
}

Coefficients Coefficients::parse(const std::string& text) {
  auto number = [&](std::size_t offset) {
    std::size_t used = 0;
    std::string rest = text.substr(offset);
    unsigned long long v = 0;
    try {
      v = std::stoull(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw std::invalid_argument("bad coefficients: " + text);
    return static_cast<std::uint64_t>(v);
  };
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint64_t p = number(3);
    if (!is_prime(p)) throw std::invalid_argument("Fp needs a prime, got " + std::to_string(p));
    return prime(p);
  }
  if (text.rfind("Zmod:", 0) == 0) {
    std::uint64_t m = number(5);
    if (m < 2) throw std::invalid_argument("Zmod needs m >= 2");
    return modulo(m);
  }
  throw std::invalid_argument("unknown coefficients '" + text + "' (Z, Q, Fp:<p>, Zmod:<m>)");
}

std::string Coefficients::name() const {
  switch (kind) {
    case CoeffKind::Z: return "Z";
    case CoeffKind::Q: return "Q";
    case CoeffKind::Fp: return "Fp:" + std::to_string(value);
    case CoeffKind::Zmod: return "Zmod:" + std::to_string(value);
  }
  return "?";
}

std::vector<std::size_t> HomologyResult::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.rank);
  return out;
}

namespace {

std::vector<std::vector<BigInt>> divisors_of(const ChainComplex& cx, bool transpose) {
  std::vector<std::vector<BigInt>> d(cx.ranks.size() + 1);
  for (std::size_t n = 1; n < cx.ranks.size(); ++n) {
    IntMatrix m = cx.boundary[n].dense();
    d[n] = smith_divisors(transpose ? m.transposed() : std::move(m));
  }
  return d;
}

std::vector<BigInt> above_one(const std::vector<BigInt>& ds) {
  std::vector<BigInt> out;
  for (const auto& x : ds)
    if (x > 1) out.push_back(x);
  return out;
}

std::size_t field_rank(const std::vector<BigInt>& ds, const Coefficients& c) {
  return c.kind == CoeffKind::Fp ? rank_mod(ds, BigInt(static_cast<unsigned long>(c.value)))
                                 : ds.size();
}

BigInt gcd_with(const BigInt& d, std::uint64_t m) {
  BigInt g;
  BigInt mm(static_cast<unsigned long>(m));
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
  return g;
}

/// Summands of (Z^rank + sum Z/d) tensor Z/m, plus Tor(sum Z/e, Z/m).
DegreeGroup mod_group(std::size_t rank, const std::vector<BigInt>& tens, const std::vector<BigInt>& tor,
                      std::uint64_t m) {
  DegreeGroup g;
  for (std::size_t i = 0; i < rank; ++i) g.torsion.emplace_back(static_cast<unsigned long>(m));
  for (const auto& d : tens) {
    BigInt x = gcd_with(d, m);
    if (x > 1) g.torsion.push_back(x);
  }
  for (const auto& d : tor) {
    BigInt x = gcd_with(d, m);
    if (x > 1) g.torsion.push_back(x);
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

}  // namespace

HomologyResult homology(const ChainComplex& cx, Coefficients coeff) {
  HomologyResult res;
  res.coeff = coeff;
  auto d = divisors_of(cx, false);
  std::size_t top = cx.ranks.size();
  std::vector<std::size_t> zrank(top);
  std::vector<std::vector<BigInt>> ztors(top);
  for (std::size_t n = 0; n < top; ++n) {
    zrank[n] = cx.ranks[n] - d[n].size() - d[n + 1].size();
    ztors[n] = above_one(d[n + 1]);
  }
  for (std::size_t n = 0; n < top; ++n) {
    DegreeGroup g;
    switch (coeff.kind) {
      case CoeffKind::Z:
        g.rank = zrank[n];
        g.torsion = ztors[n];
        break;
      case CoeffKind::Q:
      case CoeffKind::Fp:
        g.rank = cx.ranks[n] - field_rank(d[n], coeff) - field_rank(d[n + 1], coeff);
        break;
      case CoeffKind::Zmod:
        g = mod_group(zrank[n], ztors[n], n == 0 ? std::vector<BigInt>{} : ztors[n - 1], coeff.value);
        break;
    }
    res.groups.push_back(std::move(g));
  }
  return res;
}

HomologyResult cohomology(const ChainComplex& cx, Coefficients coeff) {
  HomologyResult res;
  res.coeff = coeff;
  res.cohomology = true;
  // coboundary C^(n-1) -> C^n is the transpose of boundary[n]
  auto d = divisors_of(cx, true);
  std::size_t top = cx.ranks.size();
  std::vector<std::size_t> zrank(top);
  std::vector<std::vector<BigInt>> ztors(top);
  for (std::size_t n = 0; n < top; ++n) {
    zrank[n] = cx.ranks[n] - d[n].size() - d[n + 1].size();
    ztors[n] = above_one(d[n]);
  }
  for (std::size_t n = 0; n < top; ++n) {
    DegreeGroup g;
    switch (coeff.kind) {
      case CoeffKind::Z:
        g.rank = zrank[n];
        g.torsion = ztors[n];
        break;
      case CoeffKind::Q:
      case CoeffKind::Fp:
        g.rank = cx.ranks[n] - field_rank(d[n], coeff) - field_rank(d[n + 1], coeff);
        break;
      case CoeffKind::Zmod:
        g = mod_group(zrank[n], ztors[n], n + 1 < top ? ztors[n + 1] : std::vector<BigInt>{},
                      coeff.value);
        break;
    }
    res.groups.push_back(std::move(g));
  }
  return res;
}

Cochain coboundary(const FaceComplex& fc, std::size_t n, const Cochain& f) {
  if (n + 1 >= fc.counts.size()) return {};
  Cochain out(fc.counts[n + 1], Scalar(0));
  for (std::size_t c = 0; c < fc.counts[n + 1]; ++c)
    for (std::size_t i = 0; i <= n + 1; ++i) {
      const Scalar& v = f.at(fc.faces[n + 1][c][i]);
      if (i % 2 == 0)
        out[c] += v;
      else
        out[c] -= v;
    }
  return out;
}

Cochain cup_product(const FaceComplex& fc, std::size_t p, const Cochain& f, std::size_t q,
                    const Cochain& g) {
  std::size_t n = p + q;
  if (n >= fc.counts.size()) return {};
  Cochain out(fc.counts[n], Scalar(0));
  for (std::size_t c = 0; c < fc.counts[n]; ++c)
    out[c] = f.at(fc.front(n, c, p)) * g.at(fc.back(n, c, q));
  return out;
}

}  // namespace bqtop
