#include "bqtop/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "bqtop/snf.hpp"

namespace bqtop {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0;
  std::size_t j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

Word cyclic_canonical(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word best = r;
  for (const Word& base : {r, inverse(r)}) {
    Word rot = base;
    for (std::size_t k = 0; k < rot.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

std::string GroupPresentation::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) s += ' ';
    s += generators.at(static_cast<std::size_t>(std::abs(w[i])) - 1);
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

std::vector<std::string> GroupPresentation::formatted_relators() const {
  std::vector<std::string> out;
  out.reserve(relators.size());
  for (const auto& r : relators) out.push_back(format(r));
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.emplace_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

namespace {

Word substitute(const Word& w, int gen, const Word& image) {
  Word out;
  Word inv = inverse(image);
  for (int x : w) {
    if (x == gen)
      out.insert(out.end(), image.begin(), image.end());
    else if (x == -gen)
      out.insert(out.end(), inv.begin(), inv.end());
    else
      out.push_back(x);
  }
  return free_reduce(out);
}

void normalize(std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (!seen.insert(cyclic_canonical(c)).second) continue;
    out.push_back(std::move(c));
  }
  relators = std::move(out);
}

}  // namespace

SimplifiedPresentation simplify_with_map(const GroupPresentation& p) {
  std::size_t n = p.generators.size();
  std::vector<bool> alive(n, true);
  std::vector<Word> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = {static_cast<int>(i) + 1};
  std::vector<Word> rels = p.relators;

  for (;;) {
    normalize(rels);
    std::size_t pick = rels.size();
    int gen = 0;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      std::map<int, int> count;
      for (int x : rels[r]) ++count[std::abs(x)];
      int g = 0;
      for (const auto& [k, c] : count)
        if (c == 1) {
          g = k;
          break;
        }
      if (g == 0) continue;
      if (pick == rels.size() || rels[r].size() < rels[pick].size()) {
        pick = r;
        gen = g;
      }
    }
    if (pick == rels.size()) break;
    Word r = rels[pick];
    auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [gen](int x) { return std::abs(x) == gen; }) - r.begin());
    bool positive = r[pos] > 0;
    // r ~ g^e B A, so g^e = (B A)^-1
    Word rest(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Word value = positive ? inverse(rest) : rest;
    value = free_reduce(value);
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pick));
    for (auto& other : rels) other = substitute(other, gen, value);
    for (auto& im : image) im = substitute(im, gen, value);
    alive[static_cast<std::size_t>(gen) - 1] = false;
  }

  std::vector<int> renumber(n + 1, 0);
  SimplifiedPresentation out;
  out.presentation.base = p.base;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) {
      out.presentation.generators.push_back(p.generators[i]);
      renumber[i + 1] = static_cast<int>(out.presentation.generators.size());
    }
  auto remap = [&](const Word& w) {
    Word o;
    o.reserve(w.size());
    for (int x : w) o.push_back(x > 0 ? renumber[static_cast<std::size_t>(x)]
                                      : -renumber[static_cast<std::size_t>(-x)]);
    return o;
  };
  for (const auto& r : rels) out.presentation.relators.push_back(remap(r));
  for (const auto& im : image) out.image.push_back(remap(im));
  return out;
}

GroupPresentation simplify_presentation(const GroupPresentation& p) {
  return simplify_with_map(p).presentation;
}

std::vector<long> exponent_sums(const Word& w, std::size_t generators) {
  std::vector<long> e(generators, 0);
  for (int x : w) e.at(static_cast<std::size_t>(std::abs(x)) - 1) += x > 0 ? 1 : -1;
  return e;
}

namespace {

IntMatrix relator_matrix(const GroupPresentation& p, const Word* extra) {
  std::size_t n = p.generators.size();
  std::size_t rows = p.relators.size() + (extra != nullptr ? 1 : 0);
  IntMatrix m(rows, n);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto e = exponent_sums(p.relators[r], n);
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = e[c];
  }
  if (extra != nullptr) {
    auto e = exponent_sums(*extra, n);
    for (std::size_t c = 0; c < n; ++c) m.at(rows - 1, c) = e[c];
  }
  return m;
}

}  // namespace

AbelianInvariants abelianization(const GroupPresentation& p) {
  AbelianInvariants a;
  std::size_t n = p.generators.size();
  auto divisors = smith_divisors(relator_matrix(p, nullptr));
  a.rank = n - divisors.size();
  for (const auto& d : divisors)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

bool abelian_trivial(const GroupPresentation& p, const Word& w) {
  auto e = exponent_sums(w, p.generators.size());
  if (std::all_of(e.begin(), e.end(), [](long x) { return x == 0; })) return true;
  auto base = smith_divisors(relator_matrix(p, nullptr));
  auto more = smith_divisors(relator_matrix(p, &w));
  if (base.size() != more.size()) return false;
  BigInt a = 1;
  BigInt b = 1;
  for (const auto& d : base) a *= d;
  for (const auto& d : more) b *= d;
  return a == b;
}

}  // namespace bqtop
