#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bqtop/linalg.hpp"

namespace bqtop {

/// Graded cell counts with face index tables; faces[n][c][i] is the
/// index of the i-th face of cell c of dimension n (n >= 1).
struct FaceComplex {
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::vector<std::size_t>>> faces;

  std::size_t top() const { return counts.empty() ? 0 : counts.size() - 1; }
  std::size_t front(std::size_t n, std::size_t cell, std::size_t p) const;  // first p+1 points
  std::size_t back(std::size_t n, std::size_t cell, std::size_t q) const;   // last q+1 points
  /// d_i d_j = d_(j-1) d_i for i < j; returns false and fills witness on failure.
  bool simplicial_identities(std::string* witness = nullptr) const;
};

/// Integer chain complex; boundary[n] maps C_n to C_(n-1) (boundary[0] is empty).
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<SparseIntMatrix> boundary;

  std::size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  long euler_characteristic() const;
  bool squares_to_zero() const;
};

ChainComplex chain_complex(const FaceComplex& fc);

enum class CoeffKind { Z, Q, Fp, Zmod };

struct Coefficients {
  CoeffKind kind = CoeffKind::Z;
  std::uint64_t value = 0;  // p or m

  static Coefficients parse(const std::string& text);  // Z, Q, Fp:<p>, Zmod:<m>
  static Coefficients integers() { return {}; }
  static Coefficients rationals() { return {CoeffKind::Q, 0}; }
  static Coefficients prime(std::uint64_t p) { return {CoeffKind::Fp, p}; }
  static Coefficients modulo(std::uint64_t m) { return {CoeffKind::Zmod, m}; }
  std::string name() const;
};

/// One (co)homology group: free rank and torsion divisors over Z, dimension
/// over a field, or the cyclic summand orders over Z/m (rank stays 0 there).
struct DegreeGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const DegreeGroup& a, const DegreeGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

struct HomologyResult {
  Coefficients coeff;
  bool cohomology = false;
  std::vector<DegreeGroup> groups;

  std::vector<std::size_t> ranks() const;
};

HomologyResult homology(const ChainComplex& cx, Coefficients coeff);
HomologyResult cohomology(const ChainComplex& cx, Coefficients coeff);

/// Cochains are value vectors over the cells of one dimension.
using Cochain = std::vector<Scalar>;

Cochain coboundary(const FaceComplex& fc, std::size_t n, const Cochain& f);
Cochain cup_product(const FaceComplex& fc, std::size_t p, const Cochain& f, std::size_t q,
                    const Cochain& g);

}  // namespace bqtop
