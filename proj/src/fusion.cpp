#include "blocklab/fusion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace blocklab {

FusionSystem FusionSystem::group_fusion(const PermGroup& G, const PermGroup& D, unsigned p) {
  if (!D.is_subgroup_of(G)) throw std::invalid_argument("group_fusion: D not a subgroup");
  if (!D.is_p_group(p)) throw std::invalid_argument("group_fusion: D not a p-group");
  FusionSystem F;
  F.D = D;
  F.G = G;
  F.p = p;
  return F;
}

FusionSystem FusionSystem::block_fusion(const GroupAlgebra& kG, const BlockData& bd) {
  if (!bd.has_source) throw std::invalid_argument("block_fusion: Brauer pair table missing");
  FusionSystem F;
  F.D = bd.D;
  F.G = kG.G;
  F.p = kG.F.p();
  F.block_realized = true;
  F.kG = std::make_shared<GroupAlgebra>(kG);
  F.pairs = bd.pairs;
  return F;
}

std::vector<PermGroup> FusionSystem::objects() const {
  if (!objects_) objects_ = all_subgroups(D);
  return *objects_;
}

const std::vector<GroupHom>& FusionSystem::hom(const PermGroup& R1, const PermGroup& R2) const {
  if (!R1.is_subgroup_of(D) || !R2.is_subgroup_of(D))
    throw std::invalid_argument("hom: objects must be subgroups of D");
  auto key = std::make_pair(R1.elems, R2.elems);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  std::vector<GroupHom> homs;
  std::set<std::vector<int>> seen;
  for (const Perm& x : G.elems) {
    Perm xi = x.inverse();
    bool inside = true;
    std::vector<Perm> images;
    images.reserve(R1.order());
    for (const Perm& u : R1.elems) {
      Perm v = x * u * xi;
      if (!R2.contains(v)) {
        inside = false;
        break;
      }
      images.push_back(v);
    }
    if (!inside) continue;
    if (block_realized) {
      // x must transport the Brauer pair at R1 to the table pair at xR1x^{-1}
      PermGroup xR1 = PermGroup::from_elements(G.degree, images);
      int i1 = pairs.index_of(R1);
      int ix = pairs.index_of(xR1);
      if (i1 < 0 || ix < 0) throw std::logic_error("hom: subgroup missing from pair table");
      if (kG->conj_by(x, pairs.block[i1]) != pairs.block[ix]) continue;
    }
    std::vector<int> mp(R1.order());
    for (size_t i = 0; i < R1.order(); ++i) mp[i] = R2.index_of(images[i]);
    if (seen.insert(mp).second) homs.push_back(GroupHom::from_images(R1, R2, images));
  }
  return cache_.emplace(std::move(key), std::move(homs)).first->second;
}

bool FusionSystem::hom_member(const GroupHom& phi) const {
  for (const auto& h : hom(phi.domain, phi.codomain))
    if (h == phi) return true;
  return false;
}

PermGroup FusionSystem::aut(const PermGroup& R) const {
  std::vector<Perm> perms;
  for (const auto& h : hom(R, R)) {
    std::vector<int> img(R.order());
    for (size_t i = 0; i < R.order(); ++i) img[i] = R.index_of(h.apply(R.elems[i]));
    perms.push_back(Perm(img));
  }
  return PermGroup::from_elements(static_cast<int>(R.order()), perms);
}

GroupHom FusionSystem::aut_perm_to_hom(const PermGroup& R, const Perm& alpha) const {
  std::vector<Perm> images;
  for (size_t i = 0; i < R.order(); ++i) images.push_back(R.elems[alpha(static_cast<int>(i))]);
  return GroupHom::from_images(R, R, images);
}

namespace {

PermGroup generated_by_displacements(const FusionSystem& F, bool p_residual) {
  std::vector<Perm> gens;
  for (const auto& R : F.objects()) {
    PermGroup autR = F.aut(R);
    std::vector<Perm> alphas =
        p_residual ? o_p_residual(autR, F.p).elems : autR.elems;
    for (const Perm& alpha : alphas) {
      GroupHom phi = F.aut_perm_to_hom(R, alpha);
      for (const Perm& u : R.elems) gens.push_back(u * phi.apply(u.inverse()));
    }
  }
  return generated_subgroup(F.D, gens);
}

}  // namespace

PermGroup focal(const FusionSystem& F) { return generated_by_displacements(F, false); }

PermGroup hyperfocal(const FusionSystem& F) { return generated_by_displacements(F, true); }

bool is_nilpotent_fusion(const FusionSystem& F) { return hyperfocal(F).order() == 1; }

bool subcat_contains(const PermGroup& Dtilde, const GroupHom& phi) {
  for (const Perm& u : phi.domain.elems)
    if (!Dtilde.contains(u.inverse() * phi.apply(u))) return false;
  return true;
}

bool normalizer_subcat_contains(const FusionSystem& F, const PermGroup& Dtilde,
                                const PermGroup& R, const GroupHom& phi) {
  PermGroup ND = normalizer(F.D, R);
  if (!phi.domain.is_subgroup_of(ND) || !phi.codomain.is_subgroup_of(ND))
    throw std::invalid_argument("normalizer_subcat_contains: objects not in N_D(R)");
  if (!subcat_contains(Dtilde, phi)) return false;
  std::vector<Perm> g1 = R.gens, g2 = R.gens;
  g1.insert(g1.end(), phi.domain.gens.begin(), phi.domain.gens.end());
  g2.insert(g2.end(), phi.codomain.gens.begin(), phi.codomain.gens.end());
  PermGroup RR1 = generated_subgroup(F.D, g1);
  PermGroup RR2 = generated_subgroup(F.D, g2);
  for (const auto& psi : F.hom(RR1, RR2)) {
    if (!subcat_contains(Dtilde, psi)) continue;
    bool maps_R_onto_R = true;
    for (const Perm& r : R.elems)
      if (!R.contains(psi.apply(r))) {
        maps_R_onto_R = false;
        break;
      }
    if (!maps_R_onto_R) continue;
    bool extends = true;
    for (const Perm& u : phi.domain.elems)
      if (psi.apply(u) != phi.apply(u)) {
        extends = false;
        break;
      }
    if (extends) return true;
  }
  return false;
}

Thm14Check thm14_hypothesis(const FusionSystem& F, const PermGroup& Dtilde) {
  if (!Dtilde.is_subgroup_of(F.D) || !Dtilde.is_normal_in(F.D))
    throw std::invalid_argument("thm14_hypothesis: Dtilde must be normal in D");
  if (!hyperfocal(F).is_subgroup_of(Dtilde))
    throw std::invalid_argument("thm14_hypothesis: hyperfocal not contained in Dtilde");
  Thm14Check out;
  for (const auto& R1 : F.objects())
    for (const auto& R2 : F.objects())
      for (const auto& phi : F.hom(R1, R2)) {
        if (!subcat_contains(Dtilde, phi)) continue;
        if (!normalizer_subcat_contains(F, Dtilde, F.D, phi)) {
          out.holds = false;
          out.counterexample = phi;
          return out;
        }
      }
  out.holds = true;
  return out;
}

}  // namespace blocklab
