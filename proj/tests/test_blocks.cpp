#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blocklab/group_algebra.hpp"

using namespace blocklab;

static PermGroup sym(int n) {
  std::vector<int> cyc(n), tr(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    tr[i] = i;
  }
  std::swap(tr[0], tr[1]);
  return PermGroup::enumerate(n, {Perm(cyc), Perm(tr)});
}

static PermGroup cyclic(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup::enumerate(n, {Perm(c)});
}

static PermGroup alt(int n) {
  PermGroup S = sym(n);
  return commutator_subgroup(S);  // A_n for n >= 3 here (n <= 5 in tests)
}

TEST_CASE("group algebra construction") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 2);
  CHECK(kS3.F.q() == 4);  // splitting field policy
  CHECK(kS3.A.dim == 6);
  CHECK(kS3.classes.size() == 3);
  kS3.A.check_axioms();
  Vec t = kS3.elem_vec(Perm::from_cycles("(1 2)", 3));
  CHECK(kS3.A.mul(t, t) == kS3.A.one);
  CHECK(kS3.augmentation(kS3.class_sum(1)) == 1);  // three transpositions, char 2
}

TEST_CASE("block counts over splitting fields") {
  CHECK(block_idempotents(GroupAlgebra::over_splitting_field(sym(3), 2)).size() == 2);
  CHECK(block_idempotents(GroupAlgebra::over_splitting_field(sym(3), 3)).size() == 1);
  CHECK(block_idempotents(GroupAlgebra::over_splitting_field(sym(4), 2)).size() == 1);
  CHECK(block_idempotents(GroupAlgebra::over_splitting_field(alt(4), 2)).size() == 1);
  CHECK(block_idempotents(GroupAlgebra::over_splitting_field(cyclic(6), 3)).size() == 2);
  CHECK(block_idempotents(GroupAlgebra::over_splitting_field(cyclic(4), 2)).size() == 1);
}

TEST_CASE("A5 has a principal and a defect zero 2-block") {
  GroupAlgebra kA5 = GroupAlgebra::over_splitting_field(alt(5), 2);
  CHECK(kA5.F.q() == 16);
  auto blocks = block_idempotents(kA5);
  CHECK(blocks.size() == 2);
  Vec b0 = principal_block(kA5);
  Vec b1 = blocks[0] == b0 ? blocks[1] : blocks[0];
  CHECK(defect_group(kA5, b0).order() == 4);  // Sylow 2-subgroup V4
  CHECK(defect_group(kA5, b1).order() == 1);  // defect zero
}

TEST_CASE("brauer map") {
  GroupAlgebra kS3 = GroupAlgebra::build(sym(3), GF(2, 1));
  PermGroup P = generated_subgroup(kS3.G, {Perm::from_cycles("(1 2)", 3)});
  // class sum of transpositions is P-fixed; truncation leaves the single term (1 2)
  Vec T = kS3.class_sum(1);
  REQUIRE(kS3.classes[1].size() == 3);
  Vec br = brauer_map(kS3, P, T);
  CHECK(br == kS3.elem_vec(Perm::from_cycles("(1 2)", 3)));
  CHECK(brauer_map(kS3, P, kS3.A.one) == kS3.A.one);
  // Br_1 is the identity
  CHECK(brauer_map(kS3, PermGroup::trivial(3), T) == T);
  // non-fixed element rejected
  CHECK_THROWS(brauer_map(kS3, P, kS3.elem_vec(Perm::from_cycles("(1 3)", 3))));
  // multiplicativity on fixed elements
  Vec c = kS3.class_sum(2);
  CHECK(brauer_map(kS3, P, kS3.A.mul(T, c)) ==
        kS3.A.mul(brauer_map(kS3, P, T), brauer_map(kS3, P, c)));
}

TEST_CASE("defect groups") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 2);
  auto blocks = block_idempotents(kS3);
  Vec b0 = principal_block(kS3);
  Vec b1 = blocks[0] == b0 ? blocks[1] : blocks[0];
  PermGroup D0 = defect_group(kS3, b0);
  CHECK(D0.order() == 2);
  CHECK(conjugate_subgroups(kS3.G, D0, sylow(kS3.G, 2)));
  CHECK(defect_group(kS3, b1).order() == 1);

  GroupAlgebra kS4 = GroupAlgebra::over_splitting_field(sym(4), 2);
  Vec b = block_idempotents(kS4)[0];
  CHECK(b == kS4.A.one);
  PermGroup D = defect_group(kS4, b);
  CHECK(D.order() == 8);
  CHECK(conjugate_subgroups(kS4.G, D, sylow(kS4.G, 2)));

  GroupAlgebra kC4 = GroupAlgebra::build(cyclic(4), GF(2, 1));
  CHECK(defect_group(kC4, kC4.A.one).same_group(kC4.G));

  GroupAlgebra kS3_3 = GroupAlgebra::over_splitting_field(sym(3), 3);
  CHECK(defect_group(kS3_3, principal_block(kS3_3)).order() == 3);
}

TEST_CASE("conjugation action and fixed points") {
  GroupAlgebra kS3 = GroupAlgebra::build(sym(3), GF(2, 1));
  ActionOnAlgebra act = conjugation_action(kS3, kS3.G);
  act.validate(kS3.A);
  Subspace fixed = action_fixed(kS3.A, act, kS3.G);
  CHECK(fixed.dim() == 3);  // class sums
  PermGroup C3 = generated_subgroup(kS3.G, {Perm::from_cycles("(1 2 3)", 3)});
  CHECK(action_fixed(kS3.A, act, C3).dim() == 4);
  // monotonicity
  CHECK(action_fixed(kS3.A, act, C3).contains(fixed));
}

TEST_CASE("relative trace") {
  GroupAlgebra kS3 = GroupAlgebra::build(sym(3), GF(2, 1));
  ActionOnAlgebra act = conjugation_action(kS3, kS3.G);
  PermGroup C3 = generated_subgroup(kS3.G, {Perm::from_cycles("(1 2 3)", 3)});
  PermGroup one = PermGroup::trivial(3);
  Vec t = kS3.elem_vec(Perm::from_cycles("(1 2)", 3));
  Vec tr = action_relative_trace(kS3.A, act, one, C3, t);
  CHECK(tr == kS3.class_sum(1));  // orbit sum of the transpositions
  // K = H is the identity
  CHECK(action_relative_trace(kS3.A, act, C3, C3, kS3.class_sum(2)) == kS3.class_sum(2));
  // 2 * 1 = 0 in characteristic 2
  PermGroup C2 = generated_subgroup(kS3.G, {Perm::from_cycles("(1 2)", 3)});
  CHECK(vec_is_zero(action_relative_trace(kS3.A, act, one, C2, kS3.A.one)));
}

TEST_CASE("points on algebras") {
  // kP with R = P: one local point of multiplicity 1
  GroupAlgebra kC2 = GroupAlgebra::build(cyclic(2), GF(2, 1));
  ActionOnAlgebra a2 = conjugation_action(kC2, kC2.G);
  auto pts = points_on_algebra(kC2.A, a2, kC2.G);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 1);
  CHECK(pts[0].local);

  // two one-dimensional components, trivial group: two local points
  GroupAlgebra kC2_3 = GroupAlgebra::build(cyclic(2), GF(3, 1));
  ActionOnAlgebra a3 = conjugation_action(kC2_3, PermGroup::trivial(2));
  auto pts2 = points_on_algebra(kC2_3.A, a3, PermGroup::trivial(2));
  REQUIRE(pts2.size() == 2);
  CHECK(pts2[0].multiplicity == 1);
  CHECK(pts2[1].multiplicity == 1);
  CHECK(pts2[0].local);
  CHECK(pts2[1].local);

  // kC2 in char 2 with trivial acting group: one point, not two
  auto pts3 = points_on_algebra(kC2.A, conjugation_action(kC2, PermGroup::trivial(2)),
                                PermGroup::trivial(2));
  REQUIRE(pts3.size() == 1);
  CHECK(pts3[0].multiplicity == 1);
}

TEST_CASE("brauer quotient rank equals number of fixed basis elements") {
  // permutation action on the group-element basis: the Brauer quotient has
  // dimension equal to the number of basis elements fixed by the subgroup
  GroupAlgebra kC4 = GroupAlgebra::build(cyclic(4), GF(2, 1));
  ActionOnAlgebra act4 = conjugation_action(kC4, kC4.G);
  CHECK(brauer_quotient_dim(kC4.A, act4, kC4.G) == 4);  // abelian: all 4 fixed

  GroupAlgebra kS3 = GroupAlgebra::build(sym(3), GF(2, 1));
  ActionOnAlgebra act = conjugation_action(kS3, kS3.G);
  PermGroup C2 = generated_subgroup(kS3.G, {Perm::from_cycles("(1 2)", 3)});
  CHECK(brauer_quotient_dim(kS3.A, act, C2) == 2);  // centralizer of (1 2) has order 2

  GroupAlgebra kS4 = GroupAlgebra::build(sym(4), GF(2, 1));
  ActionOnAlgebra actS4 = conjugation_action(kS4, kS4.G);
  PermGroup V4 = PermGroup::enumerate(4, {Perm::from_cycles("(1 2)(3 4)", 4),
                                          Perm::from_cycles("(1 3)(2 4)", 4)});
  CHECK(brauer_quotient_dim(kS4.A, actS4, V4) == 4);  // C_{S4}(V4) = V4
}

TEST_CASE("source idempotent and source algebra, S3 p=2 principal") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 2);
  Vec b0 = principal_block(kS3);
  PermGroup D = defect_group(kS3, b0);
  Vec l = source_idempotent(kS3, b0, D);
  CHECK(is_idempotent(kS3.A, l));
  CHECK(kS3.fixed_by(D, l));
  CHECK(!vec_is_zero(brauer_map(kS3, D, l)));
  SourceAlgebra A = source_algebra(kS3, b0, D, l);
  CHECK(A.sub.alg.dim == 2);  // nilpotent principal block: source algebra = kD
  CHECK(A.sub.alg.is_commutative());
  CHECK(A.sigma.size() == 2);
}

TEST_CASE("source algebra of a p-group is the group algebra") {
  GroupAlgebra kC4 = GroupAlgebra::build(cyclic(4), GF(2, 1));
  Vec b = block_idempotents(kC4)[0];
  CHECK(b == kC4.A.one);
  PermGroup D = defect_group(kC4, b);
  Vec l = source_idempotent(kC4, b, D);
  CHECK(l == kC4.A.one);
  CHECK(source_algebra(kC4, b, D, l).sub.alg.dim == 4);
}

TEST_CASE("source algebra of a defect zero block is a matrix corner") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 2);
  auto blocks = block_idempotents(kS3);
  Vec b0 = principal_block(kS3);
  Vec b1 = blocks[0] == b0 ? blocks[1] : blocks[0];
  PermGroup D = defect_group(kS3, b1);
  CHECK(D.order() == 1);
  Vec l = source_idempotent(kS3, b1, D);
  SourceAlgebra A = source_algebra(kS3, b1, D, l);
  CHECK(A.sub.alg.dim == 1);  // primitive corner of a matrix algebra over the splitting field
}

TEST_CASE("source algebra, S3 p=3 principal block is the whole group algebra") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 3);
  Vec b = principal_block(kS3);
  CHECK(b == kS3.A.one);
  PermGroup D = defect_group(kS3, b);
  Vec l = source_idempotent(kS3, b, D);
  CHECK(l == kS3.A.one);  // (kG)^D is local here
  SourceAlgebra A = source_algebra(kS3, b, D, l);
  CHECK(A.sub.alg.dim == 6);
}

TEST_CASE("brauer pairs, S3 p=2 principal") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 2);
  Vec b0 = principal_block(kS3);
  PermGroup D = defect_group(kS3, b0);
  Vec l = source_idempotent(kS3, b0, D);
  BrauerPairTable T = brauer_pairs(kS3, b0, D, l);
  REQUIRE(T.subgroups.size() == 2);
  int i1 = T.index_of(PermGroup::trivial(3));
  int iD = T.index_of(D);
  REQUIRE(i1 >= 0);
  REQUIRE(iD >= 0);
  CHECK(T.block[i1] == b0);             // e_1 = b
  CHECK(T.block[iD] == kS3.A.one);      // kC_G(D) = kD is local
  // cross-check the table against chained normal containment
  for (size_t k = 0; k < T.subgroups.size(); ++k)
    CHECK(pair_below(kS3, D, T.block[iD], T.subgroups[k]) == T.block[k]);
}

TEST_CASE("analyze block aggregates consistently") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 2);
  Vec b0 = principal_block(kS3);
  BlockData BD = analyze_block(kS3, b0);
  CHECK(BD.block_dim == 2);
  CHECK(BD.D.order() == 2);
  CHECK(BD.has_source);
  CHECK(BD.A.sub.alg.dim == 2);
  CHECK(BD.pairs.subgroups.size() == 2);
}

TEST_CASE("S4 p=2 full block analysis") {
  GroupAlgebra kS4 = GroupAlgebra::over_splitting_field(sym(4), 2);
  auto blocks = block_idempotents(kS4);
  REQUIRE(blocks.size() == 1);
  BlockData BD = analyze_block(kS4, blocks[0]);
  CHECK(BD.block_dim == 24);
  CHECK(BD.D.order() == 8);
  CHECK(is_idempotent(kS4.A, BD.l));
  CHECK(!vec_is_zero(brauer_map(kS4, BD.D, BD.l)));
  CHECK(BD.pairs.subgroups.size() == 10);  // D8 has 10 subgroups
  // e_1 = b and every e_R is an idempotent fixed by R
  int i1 = BD.pairs.index_of(PermGroup::trivial(4));
  CHECK(BD.pairs.block[i1] == blocks[0]);
  for (size_t k = 0; k < BD.pairs.subgroups.size(); ++k) {
    CHECK(is_idempotent(kS4.A, BD.pairs.block[k]));
    CHECK(kS4.fixed_by(BD.pairs.subgroups[k], BD.pairs.block[k]));
  }
  // chained containment reproduces the table
  int iD = BD.pairs.index_of(BD.D);
  for (size_t k = 0; k < BD.pairs.subgroups.size(); ++k)
    CHECK(pair_below(kS4, BD.D, BD.pairs.block[iD], BD.pairs.subgroups[k]) == BD.pairs.block[k]);
  // source algebra sanity: sigma images multiply like D
  CHECK(BD.A.sigma.size() == 8);
  CHECK(BD.A.sub.alg.dim >= 8);
}

TEST_CASE("relative multiplicity is reflexive on a primitive idempotent") {
  GroupAlgebra kS3 = GroupAlgebra::over_splitting_field(sym(3), 2);
  ActionOnAlgebra act = conjugation_action(kS3, kS3.G);
  PermGroup D = generated_subgroup(kS3.G, {Perm::from_cycles("(1 2)", 3)});
  auto pts = points_on_algebra(kS3.A, act, D);
  REQUIRE(!pts.empty());
  for (const auto& P : pts)
    CHECK(relative_multiplicity(kS3.A, act, D, P.rep, P.rep) == 1);
}
