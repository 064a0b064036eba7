#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blocklab/algebra.hpp"
#include "blocklab/perm.hpp"

using namespace blocklab;

// group algebra with basis indexed by group elements
static FinAlgebra group_algebra(const PermGroup& G, GF F) {
  size_t n = G.order();
  Vec one(n, 0);
  one[G.index_of(Perm::identity(G.degree))] = 1;
  return FinAlgebra::build(F, n, [&](size_t i, size_t j) {
    Vec v(n, 0);
    v[G.index_of(G.elems[i] * G.elems[j])] = 1;
    return v;
  }, one);
}

static PermGroup cyclic(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return PermGroup::enumerate(n, {Perm(c)});
}

static PermGroup sym3() {
  return PermGroup::enumerate(3, {Perm::from_cycles("(1 2 3)", 3), Perm::from_cycles("(1 2)", 3)});
}

// 2x2 matrix algebra over F, basis e11,e12,e21,e22
static FinAlgebra mat2(GF F) {
  auto idx = [](size_t r, size_t c) { return r * 2 + c; };
  Vec one(4, 0);
  one[idx(0, 0)] = one[idx(1, 1)] = 1;
  return FinAlgebra::build(F, 4, [&](size_t a, size_t b) {
    Vec v(4, 0);
    size_t ar = a / 2, ac = a % 2, br = b / 2, bc = b % 2;
    if (ac == br) v[idx(ar, bc)] = 1;
    return v;
  }, one);
}

TEST_CASE("polynomial utilities") {
  GF F(3, 1);
  PolyQ a{1, 0, 1}, b{2, 1};  // x^2+1, x+2
  auto [q, r] = pq_divmod(F, a, b);
  CHECK(pq_add(F, pq_mul(F, q, b), r) == a);
  PolyQ u, v;
  PolyQ g = pq_ext_gcd(F, a, b, u, v);
  CHECK(pq_add(F, pq_mul(F, u, a), pq_mul(F, v, b)) == g);
  // (x+1)^2 (x+2) has squarefree radical (x+1)(x+2) = x^2 + 2
  PolyQ f = pq_mul(F, pq_mul(F, PolyQ{1, 1}, PolyQ{1, 1}), PolyQ{2, 1});
  CHECK(pq_squarefree_radical(F, f) == pq_monic(F, pq_mul(F, PolyQ{1, 1}, PolyQ{2, 1})));
  // x^3 - x over F_3 is (x)(x+1)(x+2) ... its cube structure: x^3 = (x)^3
  PolyQ cube{0, 0, 0, 1};  // x^3 = x * x * x, radical x
  CHECK(pq_squarefree_radical(F, cube) == PolyQ{0, 1});
  auto roots = pq_roots(F, PolyQ{0, 2, 1});  // x^2 + 2x = x(x+2)
  CHECK(roots == std::vector<unsigned>{0, 1});
}

TEST_CASE("algebra axioms and basic ops") {
  FinAlgebra A = group_algebra(sym3(), GF(2, 1));
  CHECK(A.dim == 6);
  CHECK(!A.is_commutative());
  CHECK(A.mul(A.one, A.basis_vec(3)) == A.basis_vec(3));
  FinAlgebra M = mat2(GF(3, 1));
  CHECK(is_unit(M, M.one));
  Vec e11(4, 0); e11[0] = 1;
  CHECK(is_idempotent(M, e11));
  CHECK(!is_unit(M, e11));
  PolyQ mp = minimal_polynomial(M, e11);
  CHECK(mp == PolyQ{0, 2, 1});  // x^2 - x
  CHECK(vec_is_zero(eval_poly(M, mp, e11)));
  CHECK(center_subspace(M).dim() == 1);
  CHECK(center_subspace(A).dim() == 3);  // three conjugacy classes
}

TEST_CASE("inverse in group algebra") {
  // kC4 in characteristic 2 is local: units are exactly the augmentation-1 elements
  FinAlgebra A = group_algebra(cyclic(4), GF(2, 1));
  Vec x{1, 1, 1, 0};
  auto inv = algebra_inverse(A, x);
  REQUIRE(inv.has_value());
  CHECK(A.mul(x, *inv) == A.one);
  CHECK(A.mul(*inv, x) == A.one);
  CHECK(!algebra_inverse(A, Vec{1, 1, 0, 0}).has_value());
}

TEST_CASE("radical commutative path") {
  GF F2(2, 1);
  FinAlgebra C2 = group_algebra(cyclic(2), F2);
  Subspace J = radical(C2);
  CHECK(J.dim() == 1);
  CHECK(J.contains(Vec{1, 1}));
  FinAlgebra C4 = group_algebra(cyclic(4), F2);
  CHECK(radical(C4).dim() == 3);
  FinAlgebra C3 = group_algebra(cyclic(3), F2);
  CHECK(radical(C3).dim() == 0);  // semisimple: p does not divide |G|
  FinAlgebra C6 = group_algebra(cyclic(6), GF(3, 1));
  CHECK(radical(C6).dim() == 4);
}

TEST_CASE("radical trace chain path") {
  GF F2(2, 1), F3(3, 1);
  FinAlgebra S3_2 = group_algebra(sym3(), F2);
  Subspace J2 = radical(S3_2);
  CHECK(J2.dim() == 1);  // semisimple quotient is k x M_2(k)
  FinAlgebra S3_3 = group_algebra(sym3(), F3);
  Subspace J3 = radical(S3_3);
  CHECK(J3.dim() == 4);  // semisimple quotient is k x k (trivial and sign)
  CHECK(radical(mat2(F2)).dim() == 0);
  CHECK(radical(mat2(GF(2, 2))).dim() == 0);
}

TEST_CASE("radical agrees with exhaustive oracle") {
  GF F2(2, 1), F3(3, 1);
  CHECK(radical(group_algebra(sym3(), F2)) == radical_oracle(group_algebra(sym3(), F2)));
  CHECK(radical(group_algebra(sym3(), F3)) == radical_oracle(group_algebra(sym3(), F3)));
  CHECK(radical(group_algebra(cyclic(4), F2)) == radical_oracle(group_algebra(cyclic(4), F2)));
  CHECK(radical(mat2(F2)) == radical_oracle(mat2(F2)));
  FinAlgebra C2xC2 = group_algebra(PermGroup::enumerate(4, {Perm::from_cycles("(1 2)", 4), Perm::from_cycles("(3 4)", 4)}), F2);
  CHECK(radical(C2xC2) == radical_oracle(C2xC2));
  CHECK(radical(C2xC2).dim() == 3);
}

TEST_CASE("quotient algebra") {
  GF F2(2, 1);
  FinAlgebra C4 = group_algebra(cyclic(4), F2);
  Subspace J = radical(C4);
  QuotientAlgebra Q = quotient_algebra(C4, J);
  CHECK(Q.alg.dim == 1);
  CHECK(Q.proj.apply(C4.one) == Q.alg.one);
  // proj is an algebra map on a sample
  Vec x(4, 0); x[1] = 1;
  CHECK(Q.proj.apply(C4.mul(x, x)) == Q.alg.mul(Q.proj.apply(x), Q.proj.apply(x)));
  CHECK_THROWS(quotient_algebra(C4, Subspace::full(F2, 4)));
}

TEST_CASE("subalgebra construction") {
  GF F2(2, 1);
  FinAlgebra A = group_algebra(sym3(), F2);
  Subspace Z = center_subspace(A);
  SubAlgebra Zs = subalgebra(A, Z.basis.row_list(), A.one);
  CHECK(Zs.alg.dim == 3);
  CHECK(Zs.alg.is_commutative());
  Vec t = Zs.alg.basis_vec(1);
  CHECK(Zs.down(Zs.up(t)).has_value());
  CHECK(*Zs.down(Zs.up(t)) == t);
}

TEST_CASE("idempotent lifting") {
  // upper triangular 2x2 over F_3: basis e11, e22, e12
  GF F(3, 1);
  std::vector<Vec> tbl = {
      {1, 0, 0}, {0, 0, 0}, {0, 0, 1},
      {0, 0, 0}, {0, 1, 0}, {0, 0, 0},
      {0, 0, 0}, {0, 0, 1}, {0, 0, 0}};
  FinAlgebra T = FinAlgebra::build(F, 3, [&](size_t i, size_t j) { return tbl[i * 3 + j]; },
                                   Vec{1, 1, 0});
  Subspace J = radical(T);
  CHECK(J.dim() == 1);
  Vec x{1, 1, 2};  // 1 + 2 e12, idempotent mod J but not idempotent
  CHECK(!is_idempotent(T, x));
  Vec e = lift_idempotent(T, x, J);
  CHECK(is_idempotent(T, e));
  CHECK(J.contains(vec_sub(F, e, x)));
  CHECK_THROWS(lift_idempotent(T, Vec{2, 0, 0}, J));  // 2 e11 is not idempotent mod J
}

TEST_CASE("block idempotents of small group algebras") {
  GF F2(2, 1), F3(3, 1), F4(2, 2);
  CHECK(central_primitive_idempotents(group_algebra(sym3(), F2)).size() == 2);
  CHECK(central_primitive_idempotents(group_algebra(sym3(), F3)).size() == 1);
  CHECK(central_primitive_idempotents(group_algebra(sym3(), F4)).size() == 2);
  CHECK(central_primitive_idempotents(group_algebra(cyclic(3), F2)).size() == 2);
  CHECK(central_primitive_idempotents(group_algebra(cyclic(3), F4)).size() == 3);
  CHECK(central_primitive_idempotents(group_algebra(cyclic(6), F3)).size() == 2);
  CHECK(central_primitive_idempotents(group_algebra(cyclic(4), F2)).size() == 1);
  auto blocks = central_primitive_idempotents(group_algebra(sym3(), F2));
  FinAlgebra A = group_algebra(sym3(), F2);
  Vec sum = A.zero();
  for (const auto& b : blocks) {
    CHECK(is_idempotent(A, b));
    sum = vec_add(F2, sum, b);
  }
  CHECK(sum == A.one);
  CHECK(A.mul(blocks[0], blocks[1]) == A.zero());
}

TEST_CASE("primitive decomposition") {
  GF F4(2, 2);
  FinAlgebra A = group_algebra(sym3(), F4);
  auto prim = primitive_idempotent_decomposition(A, A.one);
  CHECK(prim.size() == 3);  // kC2 block gives 1, the M_2 block gives 2
  Vec sum = A.zero();
  for (const auto& e : prim) {
    CHECK(is_idempotent(A, e));
    CHECK(is_primitive_idempotent(A, e));
    sum = vec_add(F4, sum, e);
  }
  CHECK(sum == A.one);
  for (size_t a = 0; a < prim.size(); ++a)
    for (size_t b = a + 1; b < prim.size(); ++b)
      CHECK(vec_is_zero(A.mul(prim[a], prim[b])));
  CHECK(!is_primitive_idempotent(A, A.one));
  FinAlgebra M = mat2(GF(2, 1));
  CHECK(primitive_idempotent_decomposition(M, M.one).size() == 2);
  CHECK(is_local_algebra(group_algebra(cyclic(4), GF(2, 1))));
  CHECK(!is_local_algebra(M));
}

TEST_CASE("idempotent conjugacy") {
  FinAlgebra M = mat2(GF(2, 1));
  Vec e11(4, 0), e22(4, 0);
  e11[0] = 1;
  e22[3] = 1;
  auto q = idempotent_conjugacy(M, e11, e22);
  REQUIRE(q.has_value());
  auto qi = algebra_inverse(M, *q);
  REQUIRE(qi.has_value());
  CHECK(M.mul(M.mul(*q, e22), *qi) == e11);
  CHECK(!idempotent_conjugacy(M, e11, M.one).has_value());
  CHECK(idempotent_conjugacy(M, e11, e11).has_value());
  // non-conjugate in a commutative algebra with two blocks
  FinAlgebra C = group_algebra(cyclic(3), GF(2, 1));
  auto bl = central_primitive_idempotents(C);
  REQUIRE(bl.size() == 2);
  CHECK(!idempotent_conjugacy(C, bl[0], bl[1]).has_value());
}

TEST_CASE("unit search") {
  GF F2(2, 1);
  FinAlgebra C2 = group_algebra(cyclic(2), F2);
  auto r1 = unit_in_subspace(C2, Subspace::span(F2, 2, {{1, 0}, {0, 1}}));
  CHECK(r1.status == UnitSearchStatus::found);
  CHECK(is_unit(C2, r1.witness));
  auto r2 = unit_in_subspace(C2, Subspace::span(F2, 2, {{1, 1}}));
  CHECK(r2.status == UnitSearchStatus::none_exhaustive);
  CHECK(r2.tried == 2);
  FinAlgebra M = mat2(F2);
  Subspace offdiag = Subspace::span(F2, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  auto r3 = unit_in_subspace(M, offdiag);
  CHECK(r3.status == UnitSearchStatus::found);  // e12 + e21 is a unit
}

TEST_CASE("fixed subspace") {
  GF F2(2, 1);
  Mat swap = Mat::from_rows(F2, {{0, 1}, {1, 0}});
  Subspace fx = fixed_subspace(F2, 2, {swap});
  CHECK(fx.dim() == 1);
  CHECK(fx.contains(Vec{1, 1}));
  CHECK(fixed_subspace(F2, 3, {}).dim() == 3);
}

TEST_CASE("restriction of scalars round trip") {
  GF F(2, 2);
  Vec v{3, 2, 0, 1};
  CHECK(fq_from_fp(F, fp_from_fq(F, v)) == v);
  Mat M = fp_matrix_of(F, 2, [&](const Vec& x) { return vec_scale(F, 2, x); });
  CHECK(M.rows == 4);
  CHECK(fq_from_fp(F, M.apply(fp_from_fq(F, Vec{1, 3}))) == vec_scale(F, 2, Vec{1, 3}));
}

TEST_CASE("interchange json round trip") {
  FinAlgebra A = group_algebra(sym3(), GF(2, 2));
  std::string text = algebra_to_json(A, "demo");
  FinAlgebra B = algebra_from_json(text);
  CHECK(B.dim == A.dim);
  CHECK(B.one == A.one);
  CHECK(B.table == A.table);
  CHECK(B.F == A.F);
  CHECK(algebra_to_json(B, "demo") == text);  // canonical form is stable
}

TEST_CASE("tuple odometer") {
  GF F(3, 1);
  Vec t(3, 0);
  size_t count = 1;
  while (next_tuple(F, t)) ++count;
  CHECK(count == 27);
}
