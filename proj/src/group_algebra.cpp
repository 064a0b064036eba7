#include "blocklab/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace blocklab {

GroupAlgebra GroupAlgebra::build(const PermGroup& G, GF F) {
  GroupAlgebra kG;
  kG.G = G;
  kG.F = F;
  size_t n = G.order();
  Vec one(n, 0);
  one[G.index_of(Perm::identity(G.degree))] = 1;
  kG.A = FinAlgebra::build(F, n, [&](size_t i, size_t j) {
    Vec v(n, 0);
    v[G.index_of(G.elems[i] * G.elems[j])] = 1;
    return v;
  }, one, /*validate=*/false);
  // conjugacy classes
  std::vector<int> cls(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(kG.classes.size());
    std::vector<int> members;
    for (const Perm& x : G.elems) {
      int j = G.index_of(x * G.elems[i] * x.inverse());
      if (cls[j] < 0) {
        cls[j] = id;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    kG.classes.push_back(members);
  }
  return kG;
}

GroupAlgebra GroupAlgebra::over_splitting_field(const PermGroup& G, unsigned p) {
  return build(G, GF::splitting_field(p, G.exponent()));
}

Vec GroupAlgebra::elem_vec(const Perm& g) const {
  int i = G.index_of(g);
  if (i < 0) throw std::invalid_argument("elem_vec: element outside the group");
  Vec v(A.dim, 0);
  v[i] = 1;
  return v;
}

Vec GroupAlgebra::class_sum(size_t class_index) const {
  Vec v(A.dim, 0);
  for (int i : classes.at(class_index)) v[i] = 1;
  return v;
}

Vec GroupAlgebra::conj_by(const Perm& x, const Vec& a) const {
  Vec r(A.dim, 0);
  Perm xi = x.inverse();
  for (size_t i = 0; i < A.dim; ++i)
    if (a[i]) r[G.index_of(x * G.elems[i] * xi)] = a[i];
  return r;
}

bool GroupAlgebra::fixed_by(const PermGroup& P, const Vec& a) const {
  for (const Perm& g : P.gens)
    if (conj_by(g, a) != a) return false;
  return true;
}

unsigned GroupAlgebra::augmentation(const Vec& a) const {
  unsigned s = 0;
  for (unsigned c : a) s = F.add(s, c);
  return s;
}

std::vector<Vec> block_idempotents(const GroupAlgebra& kG, uint64_t seed) {
  // the center is spanned by class sums; decompose 1 there
  std::vector<Vec> sums;
  for (size_t c = 0; c < kG.classes.size(); ++c) sums.push_back(kG.class_sum(c));
  SubAlgebra Z = subalgebra(kG.A, sums, kG.A.one);
  auto inner = primitive_idempotent_decomposition(Z.alg, Z.alg.one, seed);
  std::vector<Vec> out;
  for (const auto& v : inner) out.push_back(Z.up(v));
  std::sort(out.begin(), out.end());
  return out;
}

Vec principal_block(const GroupAlgebra& kG, uint64_t seed) {
  for (const auto& b : block_idempotents(kG, seed))
    if (kG.augmentation(b) != 0) return b;
  throw std::logic_error("principal_block: no block with nonzero augmentation");
}

std::vector<Vec> subgroup_blocks(const GroupAlgebra& kG, const PermGroup& C, uint64_t seed) {
  if (!C.is_subgroup_of(kG.G)) throw std::invalid_argument("subgroup_blocks: not a subgroup");
  // class sums of C (classes under C-conjugation), embedded in kG
  std::vector<Vec> sums;
  std::vector<char> seen(C.order(), 0);
  for (size_t i = 0; i < C.order(); ++i) {
    if (seen[i]) continue;
    Vec v(kG.A.dim, 0);
    for (const Perm& x : C.elems) {
      Perm y = x * C.elems[i] * x.inverse();
      int ci = C.index_of(y);
      if (!seen[ci]) {
        seen[ci] = 1;
        v[kG.G.index_of(y)] = 1;
      }
    }
    sums.push_back(v);
  }
  SubAlgebra Z = subalgebra(kG.A, sums, kG.A.one);
  auto inner = primitive_idempotent_decomposition(Z.alg, Z.alg.one, seed);
  std::vector<Vec> out;
  for (const auto& v : inner) out.push_back(Z.up(v));
  std::sort(out.begin(), out.end());
  return out;
}

Vec brauer_map(const GroupAlgebra& kG, const PermGroup& P, const Vec& a) {
  if (!kG.fixed_by(P, a)) throw std::invalid_argument("brauer_map: element not P-fixed");
  PermGroup C = centralizer(kG.G, P);
  Vec r(kG.A.dim, 0);
  for (size_t i = 0; i < kG.A.dim; ++i)
    if (a[i] && C.contains(kG.G.elems[i])) r[i] = a[i];
  return r;
}

PermGroup defect_group(const GroupAlgebra& kG, const Vec& b) {
  unsigned p = kG.F.p();
  auto subs = all_subgroups(kG.G);
  std::vector<PermGroup> psubs;
  for (auto& S : subs)
    if (S.is_p_group(p)) psubs.push_back(S);
  auto reps = subgroup_conjugacy_reps(kG.G, psubs);
  std::vector<PermGroup> hits;
  for (const auto& P : reps)
    if (!vec_is_zero(brauer_map(kG, P, b))) hits.push_back(P);
  if (hits.empty()) throw std::logic_error("defect_group: Br_1(b) = b vanished");
  size_t best = 0;
  for (const auto& P : hits) best = std::max(best, P.order());
  std::vector<PermGroup> maximal;
  for (const auto& P : hits)
    if (P.order() == best) maximal.push_back(P);
  for (size_t i = 1; i < maximal.size(); ++i)
    if (!conjugate_subgroups(kG.G, maximal[0], maximal[i]))
      throw std::logic_error("defect_group: maximal classes not conjugate");
  return maximal[0];
}

const Mat& ActionOnAlgebra::of(const Perm& g) const {
  int i = R.index_of(g);
  if (i < 0) throw std::invalid_argument("ActionOnAlgebra: element outside the acting group");
  return act[i];
}

void ActionOnAlgebra::validate(const FinAlgebra& B) const {
  for (size_t i = 0; i < R.order(); ++i) {
    const Mat& M = act[i];
    // algebra automorphism on basis products, unit preserved
    if (M.apply(B.one) != B.one) throw std::invalid_argument("action: unit not preserved");
    for (size_t a = 0; a < B.dim; ++a)
      for (size_t c = 0; c < B.dim; ++c)
        if (M.apply(B.basis_mul(a, c)) != B.mul(M.apply(B.basis_vec(a)), M.apply(B.basis_vec(c))))
          throw std::invalid_argument("action: not multiplicative");
  }
  for (size_t i = 0; i < R.order(); ++i)
    for (size_t j = 0; j < R.order(); ++j) {
      int k = R.index_of(R.elems[i] * R.elems[j]);
      if (!(act[i] * act[j] == act[k]))
        throw std::invalid_argument("action: composition law fails");
    }
}

ActionOnAlgebra conjugation_action(const GroupAlgebra& kG, const PermGroup& R) {
  if (!R.is_subgroup_of(kG.G)) throw std::invalid_argument("conjugation_action: not a subgroup");
  ActionOnAlgebra A;
  A.R = R;
  for (const Perm& x : R.elems) {
    Mat M(kG.F, kG.A.dim, kG.A.dim);
    Perm xi = x.inverse();
    for (size_t j = 0; j < kG.A.dim; ++j)
      M.at(kG.G.index_of(x * kG.G.elems[j] * xi), j) = 1;
    A.act.push_back(M);
  }
  return A;
}

Subspace action_fixed(const FinAlgebra& B, const ActionOnAlgebra& act, const PermGroup& H) {
  std::vector<Mat> mats;
  for (const Perm& g : H.gens) mats.push_back(act.of(g));
  return fixed_subspace(B.F, B.dim, mats);
}

Vec action_relative_trace(const FinAlgebra& B, const ActionOnAlgebra& act,
                          const PermGroup& K, const PermGroup& H, const Vec& a) {
  if (!K.is_subgroup_of(H)) throw std::invalid_argument("relative_trace: K not in H");
  for (const Perm& g : K.gens)
    if (act.of(g).apply(a) != a) throw std::invalid_argument("relative_trace: a not K-fixed");
  Vec r(B.dim, 0);
  for (const Perm& x : left_transversal(H, K)) r = vec_add(B.F, r, act.of(x).apply(a));
  return r;
}

Subspace action_brauer_kernel(const FinAlgebra& B, const ActionOnAlgebra& act,
                              const PermGroup& H) {
  // maximal subgroups suffice by transitivity of the relative trace
  std::vector<PermGroup> proper;
  for (auto& S : all_subgroups(H))
    if (S.order() < H.order()) proper.push_back(S);
  std::vector<Vec> gens;
  for (const auto& Q : proper) {
    bool maximal = true;
    for (const auto& S : proper)
      if (S.order() > Q.order() && Q.is_subgroup_of(S)) { maximal = false; break; }
    if (!maximal) continue;
    Subspace BQ = action_fixed(B, act, Q);
    for (size_t r = 0; r < BQ.dim(); ++r)
      gens.push_back(action_relative_trace(B, act, Q, H, BQ.basis.row(r)));
  }
  if (H.order() == 1) return Subspace::zero(B.F, B.dim);
  return Subspace::span(B.F, B.dim, gens);
}

size_t brauer_quotient_dim(const FinAlgebra& B, const ActionOnAlgebra& act,
                           const PermGroup& H) {
  Subspace fixed = action_fixed(B, act, H);
  Subspace ker = action_brauer_kernel(B, act, H).intersect(fixed);
  return fixed.dim() - ker.dim();
}

std::vector<Point> points_on_algebra(const FinAlgebra& B, const ActionOnAlgebra& act,
                                     const PermGroup& H, uint64_t seed) {
  Subspace fixed = action_fixed(B, act, H);
  SubAlgebra BH = subalgebra(B, fixed.basis.row_list(), B.one);
  auto decomp = primitive_idempotent_decomposition(BH.alg, BH.alg.one, seed);
  Subspace ker = action_brauer_kernel(B, act, H);
  std::vector<Point> pts;
  std::vector<int> assigned(decomp.size(), -1);
  for (size_t a = 0; a < decomp.size(); ++a) {
    if (assigned[a] >= 0) continue;
    Point P;
    P.rep = BH.up(decomp[a]);
    P.multiplicity = 1;
    assigned[a] = static_cast<int>(pts.size());
    for (size_t b = a + 1; b < decomp.size(); ++b) {
      if (assigned[b] >= 0) continue;
      if (idempotent_conjugacy(BH.alg, decomp[a], decomp[b], seed).has_value()) {
        assigned[b] = assigned[a];
        ++P.multiplicity;
      }
    }
    P.local = !ker.contains(P.rep);
    pts.push_back(P);
  }
  return pts;
}

size_t relative_multiplicity(const FinAlgebra& B, const ActionOnAlgebra& act,
                             const PermGroup& T, const Vec& i, const Vec& j,
                             uint64_t seed) {
  Subspace fixed = action_fixed(B, act, T);
  SubAlgebra BT = subalgebra(B, fixed.basis.row_list(), B.one);
  auto ic = BT.down(i), jc = BT.down(j);
  if (!ic || !jc) throw std::invalid_argument("relative_multiplicity: idempotent not T-fixed");
  auto decomp = primitive_idempotent_decomposition(BT.alg, *ic, seed);
  size_t count = 0;
  for (const auto& f : decomp)
    if (idempotent_conjugacy(BT.alg, *jc, f, seed).has_value()) ++count;
  return count;
}

Vec source_idempotent(const GroupAlgebra& kG, const Vec& b, const PermGroup& D,
                      uint64_t seed) {
  ActionOnAlgebra conj = conjugation_action(kG, D);
  Subspace fixedAll = action_fixed(kG.A, conj, D);
  // (kG b)^D with unit b
  std::vector<Vec> rows;
  for (size_t r = 0; r < fixedAll.dim(); ++r)
    rows.push_back(kG.A.mul(fixedAll.basis.row(r), b));
  SubAlgebra C = subalgebra(kG.A, rows, b);
  auto decomp = primitive_idempotent_decomposition(C.alg, C.alg.one, seed);
  std::vector<Vec> cands;
  for (const auto& e : decomp) {
    Vec up = C.up(e);
    if (!vec_is_zero(brauer_map(kG, D, up))) cands.push_back(up);
  }
  if (cands.empty()) throw std::logic_error("source_idempotent: no local primitive idempotent");
  std::sort(cands.begin(), cands.end());
  return cands[0];
}

SourceAlgebra source_algebra(const GroupAlgebra& kG, const Vec& b, const PermGroup& D,
                             const Vec& l) {
  if (!is_idempotent(kG.A, l)) throw std::invalid_argument("source_algebra: l not idempotent");
  if (!kG.fixed_by(D, l)) throw std::invalid_argument("source_algebra: l not D-fixed");
  SourceAlgebra S;
  S.l = l;
  S.D = D;
  std::vector<Vec> rows;
  for (size_t i = 0; i < kG.A.dim; ++i)
    rows.push_back(kG.A.mul(l, kG.A.mul(kG.A.basis_vec(i), l)));
  S.sub = subalgebra(kG.A, rows, l);
  for (const Perm& u : D.elems) {
    Vec ul = kG.A.mul(kG.elem_vec(u), l);
    auto c = S.sub.down(ul);
    if (!c) throw std::logic_error("source_algebra: u*l outside l kG l");
    S.sigma.push_back(*c);
  }
  // interior structure check: sigma is multiplicative and lands in units of A
  for (size_t i = 0; i < D.order(); ++i) {
    for (size_t j = 0; j < D.order(); ++j) {
      int k = D.index_of(D.elems[i] * D.elems[j]);
      if (S.sub.alg.mul(S.sigma[i], S.sigma[j]) != S.sigma[k])
        throw std::logic_error("source_algebra: interior map not multiplicative");
    }
    if (!is_unit(S.sub.alg, S.sigma[i]))
      throw std::logic_error("source_algebra: interior image not a unit");
  }
  return S;
}

int BrauerPairTable::index_of(const PermGroup& R) const {
  for (size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].same_group(R)) return static_cast<int>(i);
  return -1;
}

BrauerPairTable brauer_pairs(const GroupAlgebra& kG, const Vec& b, const PermGroup& D,
                             const Vec& l, uint64_t seed) {
  BrauerPairTable T;
  for (auto& R : all_subgroups(D)) {
    Vec t = brauer_map(kG, R, l);
    PermGroup C = centralizer(kG.G, R);
    std::vector<Vec> blocks = subgroup_blocks(kG, C, seed);
    std::optional<Vec> found;
    for (const auto& e : blocks) {
      if (!vec_is_zero(kG.A.mul(t, e))) {
        if (found) throw std::logic_error("brauer_pairs: e_R not unique");
        found = e;
      }
    }
    if (!found) throw std::logic_error("brauer_pairs: Br_R(l) annihilated by every block");
    T.subgroups.push_back(R);
    T.block.push_back(*found);
  }
  return T;
}

bool pair_normal_contained(const GroupAlgebra& kG, const PermGroup& Q, const Vec& eQ,
                           const PermGroup& R, const Vec& eR) {
  if (!Q.is_subgroup_of(R) || !Q.is_normal_in(R)) return false;
  for (const Perm& x : R.gens)
    if (kG.conj_by(x, eQ) != eQ) return false;
  Vec br = brauer_map(kG, R, eQ);
  return kG.A.mul(eR, br) == eR;
}

Vec pair_below(const GroupAlgebra& kG, const PermGroup& R, const Vec& eR,
               const PermGroup& Q, uint64_t seed) {
  if (!Q.is_subgroup_of(R)) throw std::invalid_argument("pair_below: Q not in R");
  if (Q.same_group(R)) return eR;
  PermGroup M = normalizer(R, Q);  // strictly larger than Q inside the p-group R
  Vec eM = M.same_group(R) ? eR : pair_below(kG, R, eR, M, seed);
  PermGroup C = centralizer(kG.G, Q);
  std::optional<Vec> found;
  for (const auto& e : subgroup_blocks(kG, C, seed)) {
    if (pair_normal_contained(kG, Q, e, M, eM)) {
      if (found) throw std::logic_error("pair_below: containment not unique");
      found = e;
    }
  }
  if (!found) throw std::logic_error("pair_below: no block normally contained");
  return *found;
}

bool pair_contained(const GroupAlgebra& kG, const PermGroup& Q, const Vec& eQ,
                    const PermGroup& R, const Vec& eR, uint64_t seed) {
  if (!Q.is_subgroup_of(R)) return false;
  return pair_below(kG, R, eR, Q, seed) == eQ;
}

BlockData analyze_block(const GroupAlgebra& kG, const Vec& b, bool with_source,
                        uint64_t seed) {
  BlockData BD;
  BD.kG = kG;
  BD.b = b;
  std::vector<Vec> rows;
  for (size_t i = 0; i < kG.A.dim; ++i) rows.push_back(kG.A.mul(b, kG.A.basis_vec(i)));
  BD.block_dim = Subspace::span(kG.F, kG.A.dim, rows).dim();
  BD.D = defect_group(kG, b);
  if (with_source) {
    BD.l = source_idempotent(kG, b, BD.D, seed);
    BD.A = source_algebra(kG, b, BD.D, BD.l);
    BD.pairs = brauer_pairs(kG, b, BD.D, BD.l, seed);
    BD.has_source = true;
  }
  return BD;
}

}  // namespace blocklab
