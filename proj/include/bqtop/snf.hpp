#pragma once

#include <vector>

#include "bqtop/linalg.hpp"

namespace bqtop {

struct SmithResult {
  std::vector<BigInt> divisors;  // nonzero diagonal entries, d1 | d2 | ...
  std::size_t rank = 0;
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix V;  // cols x cols, unimodular
  IntMatrix D;  // U * M * V
  bool certified = false;  // U*M*V == D was checked by multiplication
};

/// Smith normal form with transform certificates.
SmithResult smith_normal_form(const IntMatrix& m);

/// Divisors only, without certificates (used for homology).
std::vector<BigInt> smith_divisors(IntMatrix m);

/// Number of divisors that survive reduction modulo p (rank over F_p).
std::size_t rank_mod(const std::vector<BigInt>& divisors, const BigInt& p);

}  // namespace bqtop
