#include "blocklab/stable_basis.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace blocklab {

namespace {

constexpr size_t kValidateDimCap = 32;

Mat conj_mat(const FinAlgebra& A, const Vec& u, const Vec& uinv) {
  return A.left_mult(u) * A.right_mult(uinv);
}

}  // namespace

const Vec& InteriorAlgebra::sigma_of(const Perm& n) const {
  int i = N.index_of(n);
  if (i < 0) throw std::invalid_argument("sigma_of: element outside N");
  return sigma[i];
}

const Mat& InteriorAlgebra::act_of(const Perm& x) const {
  int i = G.index_of(x);
  if (i < 0) throw std::invalid_argument("act_of: element outside G");
  return act[i];
}

PermGroup InteriorAlgebra::fiber() const { return bar_fiber_subgroup(G, N); }

Mat InteriorAlgebra::pair_action(const Perm& u, const Perm& v) const {
  Perm n = u * v.inverse();
  if (N.index_of(n) < 0)
    throw std::invalid_argument("pair_action: (u,v) outside the fiber group");
  return A.left_mult(sigma_of(n)) * act_of(v);
}

Mat InteriorAlgebra::pair_action(const Perm& pair) const {
  auto [u, v] = split_perm(pair, G.degree, G.degree);
  return pair_action(u, v);
}

void InteriorAlgebra::validate() const {
  if (!N.is_subgroup_of(G) || !N.is_normal_in(G))
    throw std::invalid_argument("interior algebra: N not normal in G");
  if (sigma.size() != N.order() || act.size() != G.order())
    throw std::invalid_argument("interior algebra: table sizes");
  // sigma is a homomorphism into units
  for (size_t i = 0; i < N.order(); ++i) {
    if (!is_unit(A, sigma[i])) throw std::invalid_argument("interior algebra: sigma not a unit");
    for (size_t j = 0; j < N.order(); ++j) {
      int k = N.index_of(N.elems[i] * N.elems[j]);
      if (A.mul(sigma[i], sigma[j]) != sigma[static_cast<size_t>(k)])
        throw std::invalid_argument("interior algebra: sigma not multiplicative");
    }
  }
  for (size_t i = 0; i < G.order(); ++i) {
    const Mat& M = act[i];
    if (M.apply(A.one) != A.one) throw std::invalid_argument("interior action: unit moved");
    if (A.dim <= kValidateDimCap)
      for (size_t a = 0; a < A.dim; ++a)
        for (size_t b = 0; b < A.dim; ++b)
          if (M.apply(A.basis_mul(a, b)) !=
              A.mul(M.apply(A.basis_vec(a)), M.apply(A.basis_vec(b))))
            throw std::invalid_argument("interior action: not an algebra automorphism");
    for (size_t j = 0; j < G.order(); ++j) {
      int k = G.index_of(G.elems[i] * G.elems[j]);
      if (!(act[i] * act[j] == act[static_cast<size_t>(k)]))
        throw std::invalid_argument("interior action: composition law fails");
    }
    // equivariance of sigma: ^x sigma(n) = sigma(x n x^{-1})
    Perm x = G.elems[i];
    Perm xi = x.inverse();
    for (size_t n = 0; n < N.order(); ++n)
      if (M.apply(sigma[n]) != sigma_of(x * N.elems[n] * xi))
        throw std::invalid_argument("interior algebra: sigma not G-equivariant");
  }
  // action restricted to N is conjugation by sigma
  for (size_t n = 0; n < N.order(); ++n) {
    Vec si = sigma_of(N.elems[n].inverse());
    if (!(act_of(N.elems[n]) == conj_mat(A, sigma[n], si)))
      throw std::invalid_argument("interior algebra: N-action is not sigma-conjugation");
  }
}

InteriorAlgebra subgroup_algebra_interior(const PermGroup& G, const PermGroup& N, GF F) {
  return subgroup_algebra_interior(G, N, N, F);
}

InteriorAlgebra subgroup_algebra_interior(const PermGroup& G, const PermGroup& N,
                                          const PermGroup& H, GF F) {
  if (!N.is_subgroup_of(H) || !H.is_subgroup_of(G))
    throw std::invalid_argument("subgroup_algebra_interior: need N <= H <= G");
  if (!N.is_normal_in(G) || !H.is_normal_in(G))
    throw std::invalid_argument("subgroup_algebra_interior: N, H must be normal in G");
  InteriorAlgebra I;
  I.G = G;
  I.N = N;
  size_t d = H.order();
  auto mul = [&](size_t i, size_t j) {
    Vec v(d, 0);
    v[static_cast<size_t>(H.index_of(H.elems[i] * H.elems[j]))] = 1;
    return v;
  };
  Vec one(d, 0);
  one[static_cast<size_t>(H.index_of(Perm::identity(H.degree)))] = 1;
  I.A = FinAlgebra::build(F, d, mul, one, d <= kValidateDimCap);
  for (const Perm& n : N.elems) {
    Vec v(d, 0);
    v[static_cast<size_t>(H.index_of(n))] = 1;
    I.sigma.push_back(v);
  }
  for (const Perm& x : G.elems) {
    Perm xi = x.inverse();
    Mat M(F, d, d);
    for (size_t i = 0; i < d; ++i) M.at(static_cast<size_t>(H.index_of(x * H.elems[i] * xi)), i) = 1;
    I.act.push_back(M);
  }
  return I;
}

InteriorAlgebra source_interior(const SourceAlgebra& S) {
  InteriorAlgebra I;
  I.G = S.D;
  I.N = S.D;
  I.A = S.sub.alg;
  I.sigma = S.sigma;
  for (size_t i = 0; i < S.D.order(); ++i) {
    const Vec& u = S.sigma[i];
    const Vec& ui = S.sigma[static_cast<size_t>(S.D.index_of(S.D.elems[i].inverse()))];
    I.act.push_back(conj_mat(I.A, u, ui));
  }
  return I;
}

int ActionBasis::find(const Vec& v) const {
  for (size_t i = 0; i < omega.size(); ++i)
    if (omega[i] == v) return static_cast<int>(i);
  return -1;
}

ActionBasis make_action_basis(const InteriorAlgebra& A, const std::vector<Vec>& omega) {
  return make_action_basis(A, A.fiber(), omega);
}

ActionBasis make_action_basis(const InteriorAlgebra& A, const PermGroup& P,
                              const std::vector<Vec>& omega) {
  if (omega.size() != A.A.dim || rank(Mat::from_rows(A.A.F, omega)) != A.A.dim)
    throw std::invalid_argument("action basis: not a linear basis");
  ActionBasis O;
  O.alg = A;
  O.P = P;
  O.omega = omega;
  for (const Perm& g : P.elems) {
    Mat M = A.pair_action(g);
    std::vector<int> img(omega.size());
    for (size_t i = 0; i < omega.size(); ++i) {
      int j = O.find(M.apply(omega[i]));
      if (j < 0) throw std::invalid_argument("action basis: not stable under the action");
      img[i] = j;
    }
    O.perm.push_back(Perm(img));
  }
  std::vector<char> seen(omega.size(), 0);
  for (size_t i = 0; i < omega.size(); ++i) {
    if (seen[i]) continue;
    std::set<size_t> orb;
    for (const Perm& g : O.perm) orb.insert(static_cast<size_t>(g(static_cast<int>(i))));
    // action closure: P is a group, so one application per element suffices
    std::vector<size_t> lst(orb.begin(), orb.end());
    for (size_t x : lst) seen[x] = 1;
    O.orbits.push_back(lst);
  }
  return O;
}

bool is_bifree(const ActionBasis& O) {
  Perm id = Perm::identity(O.alg.G.degree);
  for (const Perm& n : O.alg.N.elems) {
    if (n.is_identity()) continue;
    for (const Perm& pr : {pair_perm(n, id), pair_perm(id, n)}) {
      int i = O.P.index_of(pr);
      if (i < 0) throw std::invalid_argument("is_bifree: N x 1 not inside the acting group");
      const Perm& pg = O.perm[static_cast<size_t>(i)];
      for (size_t w = 0; w < O.omega.size(); ++w)
        if (pg(static_cast<int>(w)) == static_cast<int>(w)) return false;
    }
  }
  return true;
}

bool is_unital(const ActionBasis& O) {
  for (const Vec& w : O.omega)
    if (!is_unit(O.alg.A, w)) return false;
  return true;
}

PermGroup basis_stabilizer(const ActionBasis& O, size_t idx) {
  std::vector<Perm> fix;
  for (size_t i = 0; i < O.P.order(); ++i)
    if (O.perm[i](static_cast<int>(idx)) == static_cast<int>(idx)) fix.push_back(O.P.elems[i]);
  return PermGroup::from_elements(O.P.degree, fix);
}

IsoPair iso_pair(const GroupHom& phi) {
  if (!phi.injective) throw std::invalid_argument("iso_pair: homomorphism not injective");
  return IsoPair{phi, delta_of_hom(phi)};
}

PermGroup iso_to_subgroup(const IsoPair& p) { return p.delta; }

IsoPair subgroup_to_iso(const PermGroup& G, const PermGroup& N, const PermGroup& H) {
  int d = G.degree;
  std::vector<Perm> us, vs;
  for (const Perm& h : H.elems) {
    auto [v, u] = split_perm(h, d, d);
    if (G.index_of(u) < 0 || G.index_of(v) < 0)
      throw std::invalid_argument("subgroup_to_iso: H not inside G x G");
    if (N.index_of(v * u.inverse()) < 0)
      throw std::invalid_argument("subgroup_to_iso: H not inside the fiber group");
    if ((u.is_identity() || v.is_identity()) && !h.is_identity())
      throw std::invalid_argument("subgroup_to_iso: H meets N x 1 or 1 x N nontrivially");
    us.push_back(u);
    vs.push_back(v);
  }
  PermGroup dom = PermGroup::from_elements(d, us);
  PermGroup cod = PermGroup::from_elements(d, vs);
  std::vector<Perm> images;
  for (const Perm& u : dom.elems) {
    for (size_t k = 0; k < us.size(); ++k)
      if (us[k] == u) {
        images.push_back(vs[k]);
        break;
      }
  }
  IsoPair p{GroupHom::from_images(dom, cod, images), H};
  return p;
}

std::vector<PermGroup> iso_subgroups(const PermGroup& G, const PermGroup& N) {
  PermGroup fib = bar_fiber_subgroup(G, N);
  int d = G.degree;
  std::vector<PermGroup> out;
  for (auto& H : all_subgroups(fib)) {
    bool ok = true;
    for (const Perm& h : H.elems) {
      if (h.is_identity()) continue;
      auto [v, u] = split_perm(h, d, d);
      if (u.is_identity() || v.is_identity()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(H);
  }
  return out;
}

IsoPair stabilizer_iso(const ActionBasis& O, size_t idx) {
  if (!is_bifree(O)) throw std::invalid_argument("stabilizer_iso: basis not bifree");
  return subgroup_to_iso(O.alg.G, O.alg.N, basis_stabilizer(O, idx));
}

ActionBasis unitalize(const ActionBasis& O, const std::map<size_t, Vec>& units) {
  const FinAlgebra& A = O.alg.A;
  std::vector<Vec> f(O.omega.size());
  std::vector<char> have(O.omega.size(), 0);
  for (const auto& orb : O.orbits) {
    size_t rep = orb.front();
    auto it = units.find(rep);
    if (it == units.end())
      throw std::invalid_argument("unitalize: missing unit for an orbit representative");
    const Vec& u = it->second;
    if (!is_unit(A, u)) throw std::invalid_argument("unitalize: supplied element is not a unit");
    PermGroup stab = basis_stabilizer(O, rep);
    for (const Perm& s : stab.elems)
      if (O.alg.pair_action(s).apply(u) != u)
        throw std::invalid_argument("unitalize: unit not fixed by the stabilizer");
    for (size_t i = 0; i < O.P.order(); ++i) {
      size_t to = static_cast<size_t>(O.perm[i](static_cast<int>(rep)));
      if (!have[to]) {
        f[to] = O.alg.pair_action(O.P.elems[i]).apply(u);
        have[to] = 1;
      }
    }
  }
  // well-definedness across representative choices (eq. of stabilizers)
  for (size_t i = 0; i < O.P.order(); ++i) {
    Mat M = O.alg.pair_action(O.P.elems[i]);
    for (size_t w = 0; w < f.size(); ++w)
      if (M.apply(f[w]) != f[static_cast<size_t>(O.perm[i](static_cast<int>(w)))])
        throw std::logic_error("unitalize: orbit map inconsistent");
  }
  if (rank(Mat::from_rows(A.F, f)) != A.dim)
    throw construction_failure("unitalize: images are not linearly independent");
  return make_action_basis(O.alg, O.P, f);
}

CrossedProduct crossed_product(const InteriorAlgebra& A) {
  return crossed_product(A, left_transversal(A.G, A.N));
}

CrossedProduct crossed_product(const InteriorAlgebra& A, const std::vector<Perm>& transversal) {
  size_t t = transversal.size();
  if (t * A.N.order() != A.G.order())
    throw std::invalid_argument("crossed_product: transversal size mismatch");
  auto coset_of = [&](const Perm& x) -> size_t {
    for (size_t r = 0; r < t; ++r)
      if (A.N.index_of(x * transversal[r].inverse()) >= 0) return r;
    throw std::invalid_argument("crossed_product: transversal misses a coset");
  };
  size_t nA = A.A.dim, dim = nA * t;
  const GF& F = A.A.F;
  // a (x) g  with  g = n * transversal[r]  is  (a * sigma(n)) placed in block r
  auto place = [&](const Vec& a, const Perm& g) {
    size_t r = coset_of(g);
    Vec c = A.A.mul(a, A.sigma_of(g * transversal[r].inverse()));
    Vec out(dim, 0);
    std::copy(c.begin(), c.end(), out.begin() + static_cast<long>(r * nA));
    return out;
  };
  auto mul = [&](size_t I, size_t J) {
    size_t s = I / nA, i = I % nA, tq = J / nA, j = J % nA;
    Vec c = A.A.mul(A.A.basis_vec(i), A.act_of(transversal[s]).apply(A.A.basis_vec(j)));
    return place(c, transversal[s] * transversal[tq]);
  };
  Vec one = place(A.A.one, Perm::identity(A.G.degree));
  CrossedProduct C;
  C.transversal = transversal;
  C.alg.G = A.G;
  C.alg.N = A.G;
  C.alg.A = FinAlgebra::build(F, dim, mul, one, dim <= kValidateDimCap);
  for (const Perm& x : A.G.elems) C.alg.sigma.push_back(place(A.A.one, x));
  for (const Perm& x : A.G.elems) {
    Vec sx = place(A.A.one, x);
    Vec sxi = place(A.A.one, x.inverse());
    C.alg.act.push_back(conj_mat(C.alg.A, sx, sxi));
  }
  if (dim <= kValidateDimCap) C.alg.validate();
  return C;
}

Vec CrossedProduct::embed(const InteriorAlgebra& base, const Vec& a) const {
  size_t nA = base.A.dim, t = transversal.size();
  for (size_t r = 0; r < t; ++r) {
    if (base.N.index_of(transversal[r]) < 0) continue;
    Vec c = base.A.mul(a, base.sigma_of(transversal[r].inverse()));
    Vec out(nA * t, 0);
    std::copy(c.begin(), c.end(), out.begin() + static_cast<long>(r * nA));
    return out;
  }
  throw std::invalid_argument("embed: transversal misses the trivial coset");
}

ActionBasis lift_basis(const ActionBasis& O, const CrossedProduct& C) {
  if (!is_unital(O)) throw std::invalid_argument("lift_basis: basis not unital");
  size_t nA = O.alg.A.dim;
  std::vector<Vec> B;
  for (size_t s = 0; s < C.transversal.size(); ++s)
    for (const Vec& w : O.omega) {
      Vec v(C.alg.A.dim, 0);
      std::copy(w.begin(), w.end(), v.begin() + static_cast<long>(s * nA));
      B.push_back(v);
    }
  ActionBasis out = make_action_basis(C.alg, B);
  if (!is_unital(out)) throw std::logic_error("lift_basis: lifted basis not unital");
  return out;
}

ActionOnAlgebra pair_action_on(const InteriorAlgebra& A, const PermGroup& pairs) {
  ActionOnAlgebra act;
  act.R = pairs;
  for (const Perm& g : pairs.elems) act.act.push_back(A.pair_action(g));
  return act;
}

size_t brauer_quotient_dim(const InteriorAlgebra& A, const IsoPair& phi) {
  if (!phi.delta.is_p_group(A.A.F.p()))
    throw std::invalid_argument("brauer_quotient_dim: Delta(phi) is not a p-group");
  ActionOnAlgebra act = pair_action_on(A, phi.delta);
  return brauer_quotient_dim(A.A, act, phi.delta);
}

CriterionResult criterion(const ActionBasis& O, uint64_t seed) {
  if (!is_bifree(O)) throw std::invalid_argument("criterion: basis not bifree");
  const InteriorAlgebra& A = O.alg;
  CriterionResult res;
  std::vector<PermGroup> Hs = iso_subgroups(A.G, A.N);
  std::vector<PermGroup> reps = subgroup_conjugacy_reps(O.P, Hs);
  bool any_undetermined = false;
  for (size_t k = 0; k < reps.size(); ++k) {
    PhiRecord rec;
    rec.phi = subgroup_to_iso(A.G, A.N, reps[k]);
    ActionOnAlgebra act = pair_action_on(A, reps[k]);
    Subspace fixed = action_fixed(A.A, act, reps[k]);
    rec.fixed_dim = fixed.dim();
    Subspace ker = action_brauer_kernel(A.A, act, reps[k]).intersect(fixed);
    rec.bq_dim = fixed.dim() - ker.dim();
    if (rec.bq_dim > 0) {
      rec.unit = unit_in_subspace(A.A, fixed, seed + 7919 * k);
      if (rec.unit.status == UnitSearchStatus::none_exhaustive) {
        res.records.push_back(rec);
        res.failing = res.records.size() - 1;
        res.verdict = CriterionVerdict::fails;
        return res;
      }
      if (rec.unit.status == UnitSearchStatus::undetermined) any_undetermined = true;
    }
    res.records.push_back(rec);
  }
  if (any_undetermined) {
    res.verdict = CriterionVerdict::undetermined;
    return res;
  }
  res.verdict = CriterionVerdict::holds;
  // assemble an explicit unital stable basis from per-orbit stabilizer units
  constexpr unsigned kAssemblyAttempts = 20;
  for (unsigned attempt = 0; attempt < kAssemblyAttempts; ++attempt) {
    std::map<size_t, Vec> units;
    bool ok = true;
    for (const auto& orb : O.orbits) {
      size_t rep = orb.front();
      PermGroup stab = basis_stabilizer(O, rep);
      ActionOnAlgebra act = pair_action_on(A, stab);
      Subspace fixed = action_fixed(A.A, act, stab);
      uint64_t s = seed + 104729 * (attempt + 1) + rep;
      // sample randomly so retries see fresh witnesses (an exhaustive search
      // would return the same unit every attempt); fall back to exhaustive
      UnitSearchResult u = unit_in_subspace(A.A, fixed, s, /*exhaustive_cap=*/1);
      if (u.status != UnitSearchStatus::found) u = unit_in_subspace(A.A, fixed, s);
      if (u.status != UnitSearchStatus::found) {
        ok = false;
        break;
      }
      units[rep] = u.witness;
    }
    if (!ok) {
      res.verdict = CriterionVerdict::undetermined;
      return res;
    }
    try {
      res.unital_basis = unitalize(O, units);
      return res;
    } catch (const construction_failure&) {
      if (attempt + 1 == kAssemblyAttempts) throw;
    }
  }
  return res;
}

namespace {

// --- generic module helpers for a p-group action given by matrices ---

struct ModuleAction {
  GF F;
  size_t dim = 0;
  const PermGroup* P = nullptr;
  const std::vector<Mat>* act = nullptr;  // indexed by P->elems

  const Mat& of(const Perm& g) const {
    int i = P->index_of(g);
    if (i < 0) throw std::invalid_argument("module action: element outside the group");
    return (*act)[static_cast<size_t>(i)];
  }
};

Subspace mod_fixed(const ModuleAction& M, const PermGroup& Q) {
  std::vector<Mat> mats;
  for (const Perm& g : Q.gens) mats.push_back(M.of(g));
  return fixed_subspace(M.F, M.dim, mats);
}

Subspace mod_brauer_kernel(const ModuleAction& M, const PermGroup& Q) {
  if (Q.order() == 1) return Subspace::zero(M.F, M.dim);
  std::vector<PermGroup> proper;
  for (auto& S : all_subgroups(Q))
    if (S.order() < Q.order()) proper.push_back(S);
  std::vector<Vec> gens;
  for (const auto& R : proper) {
    bool maximal = true;
    for (const auto& S : proper)
      if (S.order() > R.order() && R.is_subgroup_of(S)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    Subspace MR = mod_fixed(M, R);
    for (size_t r = 0; r < MR.dim(); ++r) {
      Vec tr(M.dim, 0);
      for (const Perm& x : left_transversal(Q, R))
        tr = vec_add(M.F, tr, M.of(x).apply(MR.basis.row(r)));
      gens.push_back(tr);
    }
  }
  return Subspace::span(M.F, M.dim, gens);
}

}  // namespace

std::vector<Vec> find_stable_basis(const GF& F, const PermGroup& P,
                                   const std::vector<Mat>& act, uint64_t seed) {
  if (!P.is_p_group(F.p()))
    throw std::invalid_argument("find_stable_basis: acting group is not a p-group");
  if (act.size() != P.order()) throw std::invalid_argument("find_stable_basis: table size");
  size_t d = act.empty() ? 0 : act[0].rows;
  if (d == 0) return {};
  // commutant End_P(M): X with act[g] X = X act[g] for generators g
  std::vector<Mat> cmats;
  {
    std::vector<Perm> gens = P.gens.empty() ? std::vector<Perm>{Perm::identity(P.degree)} : P.gens;
    Mat C(F, gens.size() * d * d, d * d);
    size_t row = 0;
    for (const Perm& g : gens) {
      int gi = P.index_of(g);
      const Mat& Ag = act[static_cast<size_t>(gi)];
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
          for (size_t k = 0; k < d; ++k) {
            C.at(row, k * d + j) = F.add(C.at(row, k * d + j), Ag.at(i, k));
            C.at(row, i * d + k) = F.sub(C.at(row, i * d + k), Ag.at(k, j));
          }
          ++row;
        }
    }
    Mat ker = nullspace(C);
    for (size_t r = 0; r < ker.rows; ++r) {
      Mat X(F, d, d);
      Vec rr = ker.row(r);
      X.a.assign(rr.begin(), rr.end());
      cmats.push_back(X);
    }
  }
  Subspace cspace = Subspace::span(F, d * d, [&] {
    std::vector<Vec> flat;
    for (const Mat& X : cmats) flat.push_back(Vec(X.a.begin(), X.a.end()));
    return flat;
  }());
  auto mat_from_coords = [&](const Vec& c) {
    Vec flat = cspace.basis.apply_left(c);
    Mat X(F, d, d);
    X.a.assign(flat.begin(), flat.end());
    return X;
  };
  size_t e = cspace.dim();
  auto cmul = [&](size_t i, size_t j) {
    Mat prod = mat_from_coords([&] {
      Vec c(e, 0);
      c[i] = 1;
      return c;
    }()) * mat_from_coords([&] {
      Vec c(e, 0);
      c[j] = 1;
      return c;
    }());
    auto co = cspace.coordinates(Vec(prod.a.begin(), prod.a.end()));
    if (!co) throw std::logic_error("find_stable_basis: commutant not closed");
    return *co;
  };
  Mat id = Mat::identity(F, d);
  auto idco = cspace.coordinates(Vec(id.a.begin(), id.a.end()));
  if (!idco) throw std::logic_error("find_stable_basis: identity outside commutant");
  FinAlgebra E = FinAlgebra::build(F, e, cmul, *idco, e <= kValidateDimCap);

  std::vector<PermGroup> qreps = subgroup_conjugacy_reps(P, all_subgroups(P));
  std::sort(qreps.begin(), qreps.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() > b.order(); });

  std::vector<Vec> basis_out;
  for (const Vec& ec : primitive_idempotent_decomposition(E, E.one, seed)) {
    Mat Ek = mat_from_coords(ec);
    Subspace S = Subspace::span(F, d, Ek.transpose().row_list());
    size_t s = S.dim();
    // restrict the action to the summand
    std::vector<Mat> ract(P.order(), Mat(F, s, s));
    for (size_t g = 0; g < P.order(); ++g)
      for (size_t i = 0; i < s; ++i) {
        auto co = S.coordinates(act[g].apply(S.basis.row(i)));
        if (!co) throw std::logic_error("find_stable_basis: summand not invariant");
        for (size_t r = 0; r < s; ++r) ract[g].at(r, i) = (*co)[r];
      }
    ModuleAction M{F, s, &P, &ract};
    // vertex: largest subgroup class with nonzero Brauer quotient
    const PermGroup* vertex = nullptr;
    Subspace fixedQ, kerQ;
    for (const auto& Q : qreps) {
      Subspace fx = mod_fixed(M, Q);
      if (fx.dim() == 0) continue;
      Subspace kr = mod_brauer_kernel(M, Q).intersect(fx);
      if (fx.dim() > kr.dim()) {
        vertex = &Q;
        fixedQ = fx;
        kerQ = kr;
        break;
      }
    }
    if (!vertex) throw structure_error("find_stable_basis: summand has no vertex");
    size_t index = P.order() / vertex->order();
    if (s != index)
      throw structure_error("find_stable_basis: summand is not a transitive permutation module");
    std::vector<Perm> trans = left_transversal(P, *vertex);
    // search for a Q-fixed vector with Brauer image nonzero whose orbit is a basis
    std::mt19937_64 rng(seed ^ 0x5bd1e995u);
    bool done = false;
    Vec coeff(fixedQ.dim(), 0);
    unsigned long long budget = 1u << 14;
    for (unsigned long long it = 0; it < budget && !done; ++it) {
      Vec cand;
      if (it < fixedQ.dim()) {
        Vec c(fixedQ.dim(), 0);
        c[it] = 1;
        cand = fixedQ.basis.apply_left(c);
      } else if (next_tuple(F, coeff)) {
        cand = fixedQ.basis.apply_left(coeff);
      } else {
        Vec c(fixedQ.dim(), 0);
        for (auto& x : c) x = static_cast<unsigned>(rng() % F.q());
        cand = fixedQ.basis.apply_left(c);
      }
      if (vec_is_zero(cand) || kerQ.contains(cand)) continue;
      std::vector<Vec> orbit;
      std::set<Vec> distinct;
      for (const Perm& x : trans) {
        Vec w = M.of(x).apply(cand);
        orbit.push_back(w);
        distinct.insert(w);
      }
      if (distinct.size() != index || rank(Mat::from_rows(F, orbit)) != index) continue;
      for (const Vec& w : orbit) {
        // lift from summand coordinates back to the ambient module
        Vec amb(d, 0);
        for (size_t r = 0; r < s; ++r)
          amb = vec_add(F, amb, vec_scale(F, w[r], S.basis.row(r)));
        basis_out.push_back(amb);
      }
      done = true;
    }
    if (!done) throw structure_error("find_stable_basis: no orbit generator found");
  }
  // final validation: the assembled set is a basis permuted by every element
  if (basis_out.size() != d || rank(Mat::from_rows(F, basis_out)) != d)
    throw structure_error("find_stable_basis: assembled set is not a basis");
  for (size_t g = 0; g < P.order(); ++g)
    for (const Vec& v : basis_out) {
      Vec w = act[g].apply(v);
      if (std::find(basis_out.begin(), basis_out.end(), w) == basis_out.end())
        throw structure_error("find_stable_basis: assembled basis not stable");
    }
  return basis_out;
}

ActionBasis find_stable_action_basis(const InteriorAlgebra& A, uint64_t seed) {
  PermGroup P = A.fiber();
  std::vector<Mat> act;
  for (const Perm& g : P.elems) act.push_back(A.pair_action(g));
  return make_action_basis(A, P, find_stable_basis(A.A.F, P, act, seed));
}

IsofusionResult isofusion_factorize(const InteriorAlgebra& A, const Vec& i, const Vec& j,
                                    const IsoPair& phi, uint64_t seed,
                                    unsigned long long exhaustive_cap,
                                    unsigned long long random_trials) {
  const FinAlgebra& B = A.A;
  if (!is_idempotent(B, i) || !is_idempotent(B, j))
    throw std::invalid_argument("isofusion_factorize: i, j must be idempotents");
  IsoPair phinv = iso_pair(phi.phi.inverse_iso());
  auto corner = [&](const IsoPair& ip, const Vec& a, const Vec& b) {
    ActionOnAlgebra act = pair_action_on(A, ip.delta);
    Subspace fixed = action_fixed(B, act, ip.delta);
    // {x : a x b = x} cap fixed
    Mat pin = B.left_mult(a) * B.right_mult(b) - Mat::identity(B.F, B.dim);
    Subspace pinned = Subspace::span(B.F, B.dim, nullspace(pin).row_list());
    return fixed.intersect(pinned);
  };
  Subspace W1 = corner(phi, i, j);
  Subspace W2 = corner(phinv, j, i);
  IsofusionResult out;
  if (W1.dim() == 0 || W2.dim() == 0) {
    out.exhaustive = true;
    return out;
  }
  auto try_s = [&](const Vec& s) -> bool {
    if (vec_is_zero(s)) return false;
    // solve s s' = i, s' s = j for s' in W2 (linear in s')
    Mat L = B.left_mult(s), R = B.right_mult(s);
    Mat sys(B.F, 2 * B.dim, W2.dim());
    for (size_t c = 0; c < W2.dim(); ++c) {
      Vec w = W2.basis.row(c);
      Vec lw = L.apply(w), rw = R.apply(w);
      for (size_t r = 0; r < B.dim; ++r) {
        sys.at(r, c) = lw[r];
        sys.at(B.dim + r, c) = rw[r];
      }
    }
    Vec rhs(2 * B.dim, 0);
    std::copy(i.begin(), i.end(), rhs.begin());
    std::copy(j.begin(), j.end(), rhs.begin() + static_cast<long>(B.dim));
    auto sol = solve(sys, rhs);
    if (!sol) return false;
    Vec sp = W2.basis.apply_left(*sol);
    if (B.mul(s, sp) != i || B.mul(sp, s) != j) return false;
    out.found = true;
    out.s = s;
    out.s_prime = sp;
    auto q = idempotent_conjugacy(B, i, j, seed);
    if (!q) throw std::logic_error("isofusion_factorize: i = ss', j = s's but not conjugate");
    Vec qi = *algebra_inverse(B, *q);
    Vec ci = vec_sub(B.F, B.one, i), cj = vec_sub(B.F, B.one, j);
    out.r = vec_add(B.F, s, B.mul(B.mul(ci, *q), cj));
    out.r_inverse = vec_add(B.F, sp, B.mul(B.mul(cj, qi), ci));
    if (B.mul(out.r, out.r_inverse) != B.one || B.mul(out.r_inverse, out.r) != B.one)
      throw std::logic_error("isofusion_factorize: assembled r is not a unit");
    return true;
  };
  unsigned long long total = 1;
  bool small = true;
  for (size_t k = 0; k < W1.dim() && small; ++k) {
    total *= B.F.q();
    if (total > exhaustive_cap) small = false;
  }
  if (small) {
    out.exhaustive = true;
    Vec c(W1.dim(), 0);
    do {
      if (try_s(W1.basis.apply_left(c))) return out;
    } while (next_tuple(B.F, c));
    return out;
  }
  std::mt19937_64 rng(seed);
  for (unsigned long long t = 0; t < random_trials; ++t) {
    Vec c(W1.dim(), 0);
    for (auto& x : c) x = static_cast<unsigned>(rng() % B.F.q());
    if (try_s(W1.basis.apply_left(c))) return out;
  }
  return out;
}

std::optional<std::vector<Vec>> brute_force_unital_stable_basis(const InteriorAlgebra& A,
                                                                unsigned long long cap) {
  const FinAlgebra& B = A.A;
  unsigned long long total = 1;
  for (size_t k = 0; k < B.dim; ++k) {
    total *= B.F.q();
    if (total > cap)
      throw instance_too_large("brute_force_unital_stable_basis: too many vectors");
  }
  PermGroup P = A.fiber();
  std::vector<Mat> mats;
  for (const Perm& g : P.elems) mats.push_back(A.pair_action(g));
  std::set<Vec> assigned;
  std::vector<std::vector<Vec>> orbits;
  Vec v(B.dim, 0);
  do {
    if (assigned.count(v) || !is_unit(B, v)) continue;
    std::set<Vec> orb;
    for (const Mat& M : mats) orb.insert(M.apply(v));
    orbits.emplace_back(orb.begin(), orb.end());
    assigned.insert(orb.begin(), orb.end());
  } while (next_tuple(B.F, v));
  // DFS over unions of orbits, pruned by linear independence
  std::vector<Vec> chosen;
  std::function<bool(size_t)> dfs = [&](size_t from) -> bool {
    if (chosen.size() == B.dim) return true;
    for (size_t k = from; k < orbits.size(); ++k) {
      if (chosen.size() + orbits[k].size() > B.dim) continue;
      std::vector<Vec> next = chosen;
      next.insert(next.end(), orbits[k].begin(), orbits[k].end());
      if (rank(Mat::from_rows(B.F, next)) != next.size()) continue;
      chosen.swap(next);
      if (dfs(k + 1)) return true;
      chosen.swap(next);
    }
    return false;
  };
  if (dfs(0)) return chosen;
  return std::nullopt;
}

}  // namespace blocklab
