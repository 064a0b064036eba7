#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "blocklab/algebra.hpp"
#include "blocklab/group_algebra.hpp"
#include "blocklab/perm.hpp"

namespace blocklab {

// raised when a construction that is guaranteed over large fields fails over
// the small field at hand (e.g. unitalized basis not linearly independent)
struct construction_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// raised when an input module is not of the promised shape (not p-permutation)
struct structure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An algebra A with a structural map sigma: N -> A^x (N normal in G) and a
// G-action by algebra automorphisms extending conjugation by sigma(N).
// Carries the fiber-group action (u,v)a = sigma(uv^{-1}) * (^v a) of
// {(u,v) in G x G : uN = vN} on A; pair elements live in degree 2*G.degree.
struct InteriorAlgebra {
  FinAlgebra A;
  PermGroup G;
  PermGroup N;
  std::vector<Vec> sigma;  // sigma[i] = image of N.elems[i], a unit of A
  std::vector<Mat> act;    // act[i] = automorphism for G.elems[i]

  const Vec& sigma_of(const Perm& n) const;
  const Mat& act_of(const Perm& x) const;
  PermGroup fiber() const;  // {(u,v) : uN = vN} <= G x G
  Mat pair_action(const Perm& u, const Perm& v) const;
  Mat pair_action(const Perm& pair) const;  // degree 2*G.degree element
  void validate() const;                    // throws on any broken invariant
};

// k[H] as an N-interior G-algebra, G acting by conjugation (N <= H, H and N
// normal in G). H defaults to N.
InteriorAlgebra subgroup_algebra_interior(const PermGroup& G, const PermGroup& N, GF F);
InteriorAlgebra subgroup_algebra_interior(const PermGroup& G, const PermGroup& N,
                                          const PermGroup& H, GF F);
// source algebra as a D-interior D-algebra
InteriorAlgebra source_interior(const SourceAlgebra& S);

// A basis of A permuted exactly by a subgroup P of the fiber group.
struct ActionBasis {
  InteriorAlgebra alg;
  PermGroup P;  // acting group, subgroup of fiber()
  std::vector<Vec> omega;
  std::vector<Perm> perm;                   // perm[i] = action of P.elems[i] on indices
  std::vector<std::vector<size_t>> orbits;  // index lists, each sorted, reps = front

  int find(const Vec& v) const;  // -1 if absent
};

// validates that omega is a basis and each element of P permutes it
ActionBasis make_action_basis(const InteriorAlgebra& A, const std::vector<Vec>& omega);
ActionBasis make_action_basis(const InteriorAlgebra& A, const PermGroup& P,
                              const std::vector<Vec>& omega);

bool is_bifree(const ActionBasis& O);  // N x 1 and 1 x N act freely
bool is_unital(const ActionBasis& O);  // every basis vector is a unit of A
PermGroup basis_stabilizer(const ActionBasis& O, size_t idx);

// isomorphism between subgroups of G together with its graph in G x G
struct IsoPair {
  GroupHom phi;
  PermGroup delta;  // {(phi(u), u)}
};

IsoPair iso_pair(const GroupHom& phi);
PermGroup iso_to_subgroup(const IsoPair& p);
// inverse direction: H <= fiber(G, N) with H cap (N x 1) = 1 = H cap (1 x N);
// phi_H(u) = v for (v,u) in H. Throws invalid_argument otherwise.
IsoPair subgroup_to_iso(const PermGroup& G, const PermGroup& N, const PermGroup& H);
// all subgroups H of the fiber group with trivial side intersections
std::vector<PermGroup> iso_subgroups(const PermGroup& G, const PermGroup& N);

// stabilizer of a basis element as an IsoPair (requires a bifree basis)
IsoPair stabilizer_iso(const ActionBasis& O, size_t idx);

// Replace each basis vector by a unit: units maps each orbit representative
// index (orbits[k].front()) to a unit of A fixed by that element's stabilizer.
// Throws invalid_argument on a bad unit and construction_failure if the
// resulting set is not linearly independent.
ActionBasis unitalize(const ActionBasis& O, const std::map<size_t, Vec>& units);

// crossed product A (x)_N G, a G-interior algebra of dimension dim A * [G:N];
// basis block s*dim(A)..(s+1)*dim(A)-1 is A (x) transversal[s]
struct CrossedProduct {
  InteriorAlgebra alg;
  std::vector<Perm> transversal;
  Vec embed(const InteriorAlgebra& base, const Vec& a) const;  // a (x) 1
};

CrossedProduct crossed_product(const InteriorAlgebra& A);
CrossedProduct crossed_product(const InteriorAlgebra& A, const std::vector<Perm>& transversal);

// lift a stable unital basis of A to a G x G-stable unital basis of A (x)_N G
ActionBasis lift_basis(const ActionBasis& O, const CrossedProduct& C);

// the pair action of a subgroup of the fiber group, packaged for the
// generic fixed-point/trace machinery
ActionOnAlgebra pair_action_on(const InteriorAlgebra& A, const PermGroup& pairs);

// dim of A^{Delta(phi)} / sum of relative traces from proper subgroups;
// Delta(phi) must be a p-group inside the fiber group
size_t brauer_quotient_dim(const InteriorAlgebra& A, const IsoPair& phi);

enum class CriterionVerdict { holds, fails, undetermined };

struct PhiRecord {
  IsoPair phi;
  size_t fixed_dim = 0;
  size_t bq_dim = 0;
  UnitSearchResult unit;
};

struct CriterionResult {
  CriterionVerdict verdict = CriterionVerdict::undetermined;
  std::vector<PhiRecord> records;       // one per conjugacy class of H in the
                                        // fiber group with trivial side meets
  std::optional<size_t> failing;        // index into records when verdict=fails
  std::optional<ActionBasis> unital_basis;  // when verdict=holds
};

// the unit-existence criterion for a unital stable basis, on a bifree stable
// basis; "fails" is only reported from an exhaustive unit search
CriterionResult criterion(const ActionBasis& O, uint64_t seed = 1);

// A basis of F^d permuted by the p-group action act (indexed by P.elems),
// found by decomposing the module into transitive permutation summands.
// Throws structure_error if the module is not a p-permutation module.
std::vector<Vec> find_stable_basis(const GF& F, const PermGroup& P,
                                   const std::vector<Mat>& act, uint64_t seed = 1);
// same, for A under its own fiber group action
ActionBasis find_stable_action_basis(const InteriorAlgebra& A, uint64_t seed = 1);

struct IsofusionResult {
  bool found = false;
  bool exhaustive = false;  // search regime; a negative is certified only if true
  Vec s, s_prime;           // s in i A^{Delta(phi)} j, s' in j A^{Delta(phi^-1)} i
  Vec r, r_inverse;         // r = s + (1-i) q (1-j), a unit of A
};

// factorization of an isofusion through idempotents: s s' = i, s' s = j
IsofusionResult isofusion_factorize(const InteriorAlgebra& A, const Vec& i, const Vec& j,
                                    const IsoPair& phi, uint64_t seed = 1,
                                    unsigned long long exhaustive_cap = 1u << 16,
                                    unsigned long long random_trials = 20000);

// Exhaustive search for a unital fiber-stable basis: enumerates all units of A
// (throws instance_too_large past cap), groups them into fiber orbits, and
// searches unions of orbits forming a basis. Oracle for criterion.
std::optional<std::vector<Vec>> brute_force_unital_stable_basis(
    const InteriorAlgebra& A, unsigned long long cap = 1u << 16);

}  // namespace blocklab
