#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bqtop/scalar.hpp"

namespace bqtop {

/// Letters are 1-based generator indices, negative for inverses.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
/// Least rotation of w or its inverse; identifies conjugate and inverse relators.
Word cyclic_canonical(const Word& w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::size_t> tree;  // generator indices forming the spanning tree
  std::size_t base = 0;           // base vertex

  std::string format(const Word& w) const;  // "a b^-1", "1" for the empty word
  std::vector<std::string> formatted_relators() const;
};

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // each > 1, d1 | d2 | ...

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
  std::string to_string() const;  // "Z^1 + Z/2"
};

struct SimplifiedPresentation {
  GroupPresentation presentation;
  std::vector<Word> image;  // per original generator, a word in the new generators
};

/// Tietze moves: free and cyclic reduction, duplicate removal up to
/// rotation and inversion, and elimination of generators that occur
/// exactly once in some relator.
SimplifiedPresentation simplify_with_map(const GroupPresentation& p);
GroupPresentation simplify_presentation(const GroupPresentation& p);

AbelianInvariants abelianization(const GroupPresentation& p);
std::vector<long> exponent_sums(const Word& w, std::size_t generators);

/// True when the exponent vector lies in the lattice spanned by the relators.
bool abelian_trivial(const GroupPresentation& p, const Word& w);

}  // namespace bqtop
