#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "blocklab/group_algebra.hpp"
#include "blocklab/perm.hpp"

namespace blocklab {

// Fusion category on a p-group D, realized either by conjugation inside an
// ambient group G or by the Brauer pairs of a block. Morphisms R1 -> R2 are
// stored as explicit injective homomorphisms and memoized per hom-set.
struct FusionSystem {
  PermGroup D;
  PermGroup G;  // ambient group (equals realizing group; for blocks, kG.G)
  unsigned p = 2;
  bool block_realized = false;
  std::shared_ptr<const GroupAlgebra> kG;  // only for block realization
  BrauerPairTable pairs;                   // only for block realization

  static FusionSystem group_fusion(const PermGroup& G, const PermGroup& D, unsigned p);
  static FusionSystem block_fusion(const GroupAlgebra& kG, const BlockData& bd);

  const std::vector<GroupHom>& hom(const PermGroup& R1, const PermGroup& R2) const;
  bool hom_member(const GroupHom& phi) const;
  std::vector<PermGroup> objects() const;  // all subgroups of D

  // Aut_F(R) as a permutation group on the element indices of R, plus alignment
  PermGroup aut(const PermGroup& R) const;
  GroupHom aut_perm_to_hom(const PermGroup& R, const Perm& alpha) const;

 private:
  mutable std::map<std::pair<std::vector<Perm>, std::vector<Perm>>, std::vector<GroupHom>>
      cache_;
  mutable std::optional<std::vector<PermGroup>> objects_;
};

PermGroup focal(const FusionSystem& F);
PermGroup hyperfocal(const FusionSystem& F);
bool is_nilpotent_fusion(const FusionSystem& F);  // hyperfocal trivial

// membership in the subcategory cut out by a normal subgroup Dt of D:
// u^{-1} phi(u) in Dt for every u in the domain
bool subcat_contains(const PermGroup& Dtilde, const GroupHom& phi);
// membership in the normalizer subcategory at R: phi passes subcat_contains and
// extends to some phi' on R*R1 -> R*R2 inside the plain subcategory with phi'(R) = R
bool normalizer_subcat_contains(const FusionSystem& F, const PermGroup& Dtilde,
                                const PermGroup& R, const GroupHom& phi);

struct Thm14Check {
  bool holds = false;
  std::optional<GroupHom> counterexample;
};

// equality of the plain subcategory with its normalizer subcategory at R = D
Thm14Check thm14_hypothesis(const FusionSystem& F, const PermGroup& Dtilde);

}  // namespace blocklab
