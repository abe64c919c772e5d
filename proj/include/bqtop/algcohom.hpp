#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bqtop/complex.hpp"

namespace bqtop {

/// v = scale * (image of path).
struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t path = kNoPath;
  Scalar scale{1};
  bool identity = false;
};

/// sigma * sigma' = lambda * basis[index], or zero.
struct StructureConstant {
  bool zero = true;
  Scalar lambda{0};
  std::size_t index = kNoPath;
};

/// A semi-normed basis with its structure table. Holds a pointer to the
/// path table, which must outlive it.
struct SemiNormedAlgebra {
  const PathTable* table = nullptr;
  Field field;
  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> by_pair;  // x * n + y -> basis indices
  std::vector<std::size_t> identity;              // vertex -> basis index
  std::map<std::pair<std::size_t, std::size_t>, StructureConstant> products;
  std::vector<std::size_t> path_basis;  // b(w) for nonzero paths, kNoPath otherwise
  std::vector<Scalar> path_scale;       // image(w) = scale * b(w)

  std::size_t vertex_count() const { return identity.size(); }
  const std::vector<std::size_t>& at(std::size_t x, std::size_t y) const {
    return by_pair.at(x * vertex_count() + y);
  }
  const StructureConstant& product(std::size_t a, std::size_t b) const {
    return products.at({a, b});
  }
  std::string name(std::size_t i) const;
};

struct SemiNormedFailure {
  std::string reason;
  std::vector<std::string> witness;  // path names involved
};

using SemiNormedResult = std::variant<SemiNormedAlgebra, SemiNormedFailure>;

/// Candidates: identities plus the canonical representative of every nonzero
/// natural class; then the exact verifier decides.
SemiNormedResult find_semi_normed_basis(const PathTable& pt, const PathClassTable& natural);

/// Checks a user supplied family of (path id, scale) pairs.
SemiNormedResult verify_semi_normed_basis(const PathTable& pt,
                                          const std::vector<std::pair<std::size_t, Scalar>>& family);

/// Tuples of non-identity basis elements with nonzero product.
struct SimplicialComplexSC {
  std::vector<std::vector<std::vector<std::size_t>>> tuples;  // tuples[0][v] is empty
  std::vector<std::vector<Scalar>> lambda;                    // product = lambda * basis[prod]
  std::vector<std::vector<std::size_t>> prod;
  FaceComplex faces;

  ChainComplex chain() const { return chain_complex(faces); }
  std::optional<std::size_t> find(const std::vector<std::size_t>& t) const;

 private:
  friend SimplicialComplexSC simplicial_complex(const SemiNormedAlgebra&);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index_;
};

SimplicialComplexSC simplicial_complex(const SemiNormedAlgebra& A);

struct ComparisonReport {
  std::vector<std::vector<std::size_t>> phi;        // SC_n -> C_n(B)
  std::vector<std::vector<std::size_t>> psi;        // C_n(B) -> SC_n
  std::vector<std::vector<std::size_t>> phi_sharp;  // SC_n -> C_n(B#)
  bool psi_well_defined = true;
  bool phi_chain = true;
  bool psi_chain = true;
  bool phi_psi_identity = true;
  bool psi_phi_identity = true;
  bool phi_sharp_onto = true;
  bool phi_sharp_chain = true;
  std::vector<std::size_t> kernel_ranks;  // rank of ker phi#_n
  std::vector<std::string> failures;

  bool ok() const {
    return psi_well_defined && phi_chain && psi_chain && phi_psi_identity && psi_phi_identity &&
           phi_sharp_onto && phi_sharp_chain;
  }
};

ComparisonReport phi_psi_maps(const SemiNormedAlgebra& A, const SimplicialComplexSC& sc,
                              const PathClassTable& natural, const CellComplex& cx,
                              const PathClassTable& walk, const CellComplex& cx_sharp);

/// Cibils cochains Hom over E^e of rad A tensor powers into A.
struct HochschildComplex {
  Field field;
  std::vector<std::vector<std::vector<std::size_t>>> tuples;  // tuples[0][v] empty
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> basis;  // (tuple, tau)
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index;
  std::vector<std::vector<SparseVec>> differential;  // b^n: columns over basis[n]

  std::size_t top() const { return basis.empty() ? 0 : basis.size() - 1; }
  std::vector<std::size_t> dims() const;  // HH^i
  std::size_t tuple_source(std::size_t n, std::size_t t) const;
  std::size_t tuple_target(std::size_t n, std::size_t t) const;
  std::optional<std::size_t> tuple_index(const std::vector<std::size_t>& t) const;

 private:
  friend HochschildComplex hochschild_complex(const SemiNormedAlgebra&);
  const SemiNormedAlgebra* algebra_ = nullptr;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> tuple_index_;
};

HochschildComplex hochschild_complex(const SemiNormedAlgebra& A);

/// Coboundary matrices of SC^*(A, k): columns over SC_n, rows over SC_(n+1).
std::vector<std::vector<SparseVec>> sc_coboundaries(const SimplicialComplexSC& sc, const Field& k);
std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& sizes,
                                         const std::vector<std::vector<SparseVec>>& d,
                                         const Field& k);

struct EpsilonMuReport {
  std::vector<std::vector<SparseVec>> epsilon;  // SC^n -> C^n
  std::vector<std::vector<SparseVec>> mu;       // C^n -> SC^n
  bool mu_epsilon_identity = true;
  bool epsilon_chain = true;
  std::optional<bool> mu_chain;          // checked for schurian algebras
  std::optional<bool> epsilon_mu_identity;  // checked when schurian and semi-commutative
  bool schurian = false;
  bool semi_commutative = false;
  std::vector<std::size_t> sh_dims;
  std::vector<std::size_t> hh_dims;
  std::vector<std::size_t> image_ranks;  // rank of H^i(epsilon)
  std::vector<bool> injective;
  std::vector<bool> surjective;

  bool iso_all() const;
};

EpsilonMuReport epsilon_mu(const SemiNormedAlgebra& A, const SimplicialComplexSC& sc,
                           const HochschildComplex& hc);

/// Cochains of the Hochschild complex are vectors over basis[n].
SparseVec hochschild_cup(const SemiNormedAlgebra& A, const HochschildComplex& hc, std::size_t p,
                         const SparseVec& f, std::size_t q, const SparseVec& g);
SparseVec hochschild_coboundary(const HochschildComplex& hc, std::size_t n, const SparseVec& f);

}  // namespace bqtop
