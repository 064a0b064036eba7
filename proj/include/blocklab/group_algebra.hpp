#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blocklab/algebra.hpp"
#include "blocklab/perm.hpp"

namespace blocklab {

// Group algebra F_q G with basis indexed by the sorted element list of G.
struct GroupAlgebra {
  PermGroup G;
  GF F;
  FinAlgebra A;
  std::vector<std::vector<int>> classes;  // conjugacy classes as element index lists

  static GroupAlgebra build(const PermGroup& G, GF F);
  // splitting field chosen by the field-size policy (order of p modulo the p'-part
  // of the group exponent)
  static GroupAlgebra over_splitting_field(const PermGroup& G, unsigned p);

  Vec elem_vec(const Perm& g) const;
  Vec class_sum(size_t class_index) const;
  Vec conj_by(const Perm& x, const Vec& a) const;  // x a x^{-1}
  bool fixed_by(const PermGroup& P, const Vec& a) const;
  unsigned augmentation(const Vec& a) const;
};

std::vector<Vec> block_idempotents(const GroupAlgebra& kG, uint64_t seed = 1);
Vec principal_block(const GroupAlgebra& kG, uint64_t seed = 1);
// blocks of the subgroup algebra kC, embedded in the ambient coordinates of kG
std::vector<Vec> subgroup_blocks(const GroupAlgebra& kG, const PermGroup& C, uint64_t seed = 1);

// support truncation to C_G(P); argument must be P-conjugation-fixed
Vec brauer_map(const GroupAlgebra& kG, const PermGroup& P, const Vec& a);

// maximal p-subgroup (up to conjugacy; uniqueness verified) with Br_P(b) != 0
PermGroup defect_group(const GroupAlgebra& kG, const Vec& b);

// --- generic algebra with a finite group acting by algebra automorphisms ---
struct ActionOnAlgebra {
  PermGroup R;
  std::vector<Mat> act;  // act[i] is the automorphism matrix for R.elems[i]

  const Mat& of(const Perm& g) const;
  void validate(const FinAlgebra& B) const;  // automorphism + composition law
};

// conjugation action of R <= G on kG
ActionOnAlgebra conjugation_action(const GroupAlgebra& kG, const PermGroup& R);

Subspace action_fixed(const FinAlgebra& B, const ActionOnAlgebra& act, const PermGroup& H);
// sum over coset representatives of H/K of the conjugates of a (a fixed by K)
Vec action_relative_trace(const FinAlgebra& B, const ActionOnAlgebra& act,
                          const PermGroup& K, const PermGroup& H, const Vec& a);
// sum of Tr_Q^H(B^Q) over proper subgroups Q < H: the kernel of the Brauer
// quotient map on B^H
Subspace action_brauer_kernel(const FinAlgebra& B, const ActionOnAlgebra& act,
                              const PermGroup& H);
size_t brauer_quotient_dim(const FinAlgebra& B, const ActionOnAlgebra& act,
                           const PermGroup& H);

struct Point {
  Vec rep;             // primitive idempotent of B^H, in B coordinates
  size_t multiplicity; // members of this class in a primitive decomposition of 1
  bool local;          // Br_H(rep) != 0
};

std::vector<Point> points_on_algebra(const FinAlgebra& B, const ActionOnAlgebra& act,
                                     const PermGroup& H, uint64_t seed = 1);
// number of members conjugate to j (primitive in B^T) in a primitive
// decomposition of the idempotent i inside B^T
size_t relative_multiplicity(const FinAlgebra& B, const ActionOnAlgebra& act,
                             const PermGroup& T, const Vec& i, const Vec& j,
                             uint64_t seed = 1);

// --- source idempotents, source algebras, Brauer pairs ---
Vec source_idempotent(const GroupAlgebra& kG, const Vec& b, const PermGroup& D,
                      uint64_t seed = 1);

struct SourceAlgebra {
  SubAlgebra sub;          // A = l kG l inside kG
  Vec l;                   // in kG coordinates
  PermGroup D;
  std::vector<Vec> sigma;  // sigma[i] = image of D.elems[i] in A (coords of u*l)
};

SourceAlgebra source_algebra(const GroupAlgebra& kG, const Vec& b, const PermGroup& D,
                             const Vec& l);

struct BrauerPairTable {
  std::vector<PermGroup> subgroups;  // every R <= D
  std::vector<Vec> block;            // e_R, a block of kC_G(R) in kG coordinates
  int index_of(const PermGroup& R) const;  // -1 if absent
};

BrauerPairTable brauer_pairs(const GroupAlgebra& kG, const Vec& b, const PermGroup& D,
                             const Vec& l, uint64_t seed = 1);

// (Q,eQ) normally contained in (R,eR): Q normal in R, eQ R-stable, eR*Br_R(eQ) = eR
bool pair_normal_contained(const GroupAlgebra& kG, const PermGroup& Q, const Vec& eQ,
                           const PermGroup& R, const Vec& eR);
// unique pair below (R,eR) at the subgroup Q <= R, via chains of normal inclusions
Vec pair_below(const GroupAlgebra& kG, const PermGroup& R, const Vec& eR,
               const PermGroup& Q, uint64_t seed = 1);
bool pair_contained(const GroupAlgebra& kG, const PermGroup& Q, const Vec& eQ,
                    const PermGroup& R, const Vec& eR, uint64_t seed = 1);

struct BlockData {
  GroupAlgebra kG;
  Vec b;
  size_t block_dim = 0;  // dim of b kG
  PermGroup D;
  bool has_source = false;
  Vec l;
  SourceAlgebra A;
  BrauerPairTable pairs;
};

BlockData analyze_block(const GroupAlgebra& kG, const Vec& b, bool with_source = true,
                        uint64_t seed = 1);

}  // namespace blocklab
