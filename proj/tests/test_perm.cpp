#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blocklab/perm.hpp"

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

TEST_CASE("perm basics") {
  Perm a = Perm::from_cycles("(1 2 3)", 4);
  Perm b = Perm::from_cycles("(1 2)", 4);
  CHECK(a.order() == 3);
  CHECK(b.order() == 2);
  CHECK((a * a * a).is_identity());
  CHECK((a * b) != (b * a));
  CHECK((a.inverse() * a).is_identity());
  CHECK(Perm::from_cycles("(1 2 3)(4 5)", 5).order() == 6);
  CHECK(a.cycles() == "(1 2 3)");
}

TEST_CASE("closure enumeration") {
  PermGroup S3 = PermGroup::enumerate(3, {Perm::from_cycles("(1 2 3)", 3), Perm::from_cycles("(1 2)", 3)});
  CHECK(S3.order() == 6);
  PermGroup D8 = PermGroup::enumerate(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 3)", 4)});
  CHECK(D8.order() == 8);
  CHECK(!D8.is_abelian());
  CHECK(D8.is_p_group(2));
  CHECK(D8.exponent() == 4);
  PermGroup S4 = sym(4);
  CHECK(S4.order() == 24);
  CHECK(S4.exponent() == 12);
}

TEST_CASE("from_elements validates closure") {
  Perm id = Perm::identity(3), t = Perm::from_cycles("(1 2)", 3);
  PermGroup C2 = PermGroup::from_elements(3, {id, t});
  CHECK(C2.order() == 2);
  CHECK_THROWS(PermGroup::from_elements(3, {id, Perm::from_cycles("(1 2 3)", 3)}));
}

TEST_CASE("sylow and p-residual") {
  PermGroup S4 = sym(4);
  PermGroup P = sylow(S4, 2);
  CHECK(P.order() == 8);
  CHECK(P.is_p_group(2));
  CHECK(P.is_subgroup_of(S4));
  CHECK(sylow(S4, 3).order() == 3);
  PermGroup A4 = o_p_residual(S4, 2);
  CHECK(A4.order() == 12);
  CHECK(A4.is_normal_in(S4));
  CHECK(commutator_subgroup(S4).same_group(A4));
  // O^p(G) = G when G is generated by p'-elements
  CHECK(o_p_residual(S4, 3).same_group(S4));
  PermGroup A4b = commutator_subgroup(S4);
  CHECK(commutator_subgroup(A4b).order() == 4);  // V4
}

TEST_CASE("center centralizer normalizer") {
  PermGroup D8 = PermGroup::enumerate(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 3)", 4)});
  PermGroup Z = center(D8);
  CHECK(Z.order() == 2);
  CHECK(Z.contains(Perm::from_cycles("(1 3)(2 4)", 4)));
  PermGroup refl = generated_subgroup(D8, {Perm::from_cycles("(1 3)", 4)});
  CHECK(centralizer(D8, refl).order() == 4);
  CHECK(normalizer(D8, refl).order() == 4);
  PermGroup C4 = generated_subgroup(D8, {Perm::from_cycles("(1 2 3 4)", 4)});
  CHECK(C4.is_normal_in(D8));
  CHECK(normalizer(D8, C4).same_group(D8));
}

TEST_CASE("quotient group") {
  PermGroup D8 = PermGroup::enumerate(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 3)", 4)});
  QuotientGroup Q = quotient(D8, center(D8));
  CHECK(Q.group.order() == 4);
  CHECK(Q.group.is_abelian());
  CHECK(Q.group.exponent() == 2);  // D8 / Z(D8) is the Klein group
  for (size_t i = 0; i < D8.order(); ++i) CHECK(Q.proj[i] >= 0);
}

TEST_CASE("homomorphisms") {
  PermGroup C4 = PermGroup::enumerate(4, {Perm::from_cycles("(1 2 3 4)", 4)});
  PermGroup C2 = PermGroup::enumerate(2, {Perm::from_cycles("(1 2)", 2)});
  GroupHom h = GroupHom::from_generator_images(C4, C2, {Perm::from_cycles("(1 2)", 2)});
  CHECK(!h.injective);
  CHECK(h.apply(Perm::from_cycles("(1 3)(2 4)", 4)).is_identity());
  // no hom C4 -> C2 sending a generator of order 4 to... anything is fine here,
  // but sending the order-2 generator of C2 to an order-4 image must fail
  CHECK_THROWS(GroupHom::from_generator_images(C2, C4, {Perm::from_cycles("(1 2 3 4)", 4)}));
  GroupHom id = GroupHom::identity(C4);
  CHECK(id.injective);
  CHECK(id.compose(id) == id);
  CHECK(id.inverse_iso() == id);
  PermGroup D8 = PermGroup::enumerate(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 3)", 4)});
  GroupHom c = GroupHom::conjugation(C4, C4, Perm::from_cycles("(1 3)", 4));
  CHECK(c.injective);
  CHECK(c.apply(Perm::from_cycles("(1 2 3 4)", 4)) == Perm::from_cycles("(1 4 3 2)", 4));
}

TEST_CASE("products and fiber subgroup") {
  PermGroup S3 = PermGroup::enumerate(3, {Perm::from_cycles("(1 2 3)", 3), Perm::from_cycles("(1 2)", 3)});
  PermGroup GG = direct_product(S3, S3);
  CHECK(GG.order() == 36);
  PermGroup A3 = generated_subgroup(S3, {Perm::from_cycles("(1 2 3)", 3)});
  PermGroup fib = bar_fiber_subgroup(S3, A3);
  CHECK(fib.order() == S3.order() * A3.order());  // |{(u,v): uN = vN}| = |G||N|
  PermGroup fib_triv = bar_fiber_subgroup(S3, PermGroup::trivial(3));
  CHECK(fib_triv.order() == S3.order());
  CHECK(fib_triv.same_group(delta_subgroup(S3)));
  GroupHom id = GroupHom::identity(S3);
  CHECK(delta_of_hom(id).same_group(delta_subgroup(S3)));
  auto [u, v] = split_perm(pair_perm(Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(1 3)", 3)), 3, 3);
  CHECK(u == Perm::from_cycles("(1 2)", 3));
  CHECK(v == Perm::from_cycles("(1 3)", 3));
}

TEST_CASE("subgroup catalogs") {
  PermGroup D8 = PermGroup::enumerate(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 3)", 4)});
  auto subs = all_subgroups(D8);
  CHECK(subs.size() == 10);
  auto reps = subgroup_conjugacy_reps(D8, subs);
  CHECK(reps.size() == 8);
  PermGroup r1 = generated_subgroup(D8, {Perm::from_cycles("(1 3)", 4)});
  PermGroup r2 = generated_subgroup(D8, {Perm::from_cycles("(2 4)", 4)});
  PermGroup r3 = generated_subgroup(D8, {Perm::from_cycles("(1 2)(3 4)", 4)});
  Perm w;
  CHECK(conjugate_subgroups(D8, r1, r2, &w));
  CHECK(!conjugate_subgroups(D8, r1, r3));
  auto T = left_transversal(D8, r1);
  CHECK(T.size() == 4);
}

TEST_CASE("enumeration cap") {
  std::vector<int> big(12);
  for (int i = 0; i < 12; ++i) big[i] = (i + 1) % 12;
  std::vector<int> tr(12);
  for (int i = 0; i < 12; ++i) tr[i] = i;
  std::swap(tr[0], tr[1]);
  CHECK_THROWS_AS(PermGroup::enumerate(12, {Perm(big), Perm(tr)}, 2000), instance_too_large);
}
