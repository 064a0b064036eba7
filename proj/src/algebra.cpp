#include "blocklab/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "blocklab/perm.hpp"
#include "json.hpp"

namespace blocklab {

FinAlgebra FinAlgebra::build(GF F, size_t dim,
                             const std::function<Vec(size_t, size_t)>& mul_basis,
                             const Vec& unit, bool validate) {
  FinAlgebra A;
  A.F = F;
  A.dim = dim;
  A.one = unit;
  A.table.resize(dim * dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      Vec v = mul_basis(i, j);
      if (v.size() != dim) throw std::invalid_argument("FinAlgebra: bad structure row");
      A.table[i * dim + j] = std::move(v);
    }
  if (validate) A.check_axioms();
  return A;
}

Vec FinAlgebra::basis_vec(size_t i) const {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

Vec FinAlgebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("FinAlgebra::mul: size");
  Vec r(dim, 0);
  for (size_t i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      unsigned c = F.mul(x[i], y[j]);
      const Vec& t = table[i * dim + j];
      for (size_t k = 0; k < dim; ++k)
        if (t[k]) r[k] = F.add(r[k], F.mul(c, t[k]));
    }
  }
  return r;
}

Vec FinAlgebra::pow(Vec x, unsigned long long e) const {
  Vec r = one;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Mat FinAlgebra::left_mult(const Vec& x) const {
  Mat M(F, dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    Vec c = mul(x, basis_vec(j));
    for (size_t i = 0; i < dim; ++i) M.at(i, j) = c[i];
  }
  return M;
}

Mat FinAlgebra::right_mult(const Vec& x) const {
  Mat M(F, dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    Vec c = mul(basis_vec(j), x);
    for (size_t i = 0; i < dim; ++i) M.at(i, j) = c[i];
  }
  return M;
}

bool FinAlgebra::is_commutative() const {
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j)
      if (table[i * dim + j] != table[j * dim + i]) return false;
  return true;
}

void FinAlgebra::check_axioms() const {
  for (size_t i = 0; i < dim; ++i) {
    if (mul(one, basis_vec(i)) != basis_vec(i) || mul(basis_vec(i), one) != basis_vec(i))
      throw std::invalid_argument("FinAlgebra: unit axiom fails");
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k)
        if (mul(basis_mul(i, j), basis_vec(k)) != mul(basis_vec(i), basis_mul(j, k)))
          throw std::invalid_argument("FinAlgebra: associativity fails");
  }
}

Vec SubAlgebra::up(const Vec& inner) const {
  Vec r(space.ambient, 0);
  for (size_t i = 0; i < inner.size(); ++i)
    if (inner[i]) r = vec_add(alg.F, r, vec_scale(alg.F, inner[i], space.basis.row(i)));
  return r;
}

std::optional<Vec> SubAlgebra::down(const Vec& outer) const {
  return space.coordinates(outer);
}

SubAlgebra subalgebra(const FinAlgebra& parent, const std::vector<Vec>& basis_rows,
                      const Vec& unit) {
  SubAlgebra S;
  S.space = Subspace::span(parent.F, parent.dim, basis_rows);
  auto uc = S.space.coordinates(unit);
  if (!uc) throw std::invalid_argument("subalgebra: unit not in span");
  size_t d = S.space.dim();
  std::vector<Vec> prod(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Vec p = parent.mul(S.space.basis.row(i), S.space.basis.row(j));
      auto c = S.space.coordinates(p);
      if (!c) throw std::invalid_argument("subalgebra: span not closed under multiplication");
      prod[i * d + j] = *c;
    }
  S.alg = FinAlgebra::build(parent.F, d, [&](size_t i, size_t j) { return prod[i * d + j]; },
                            *uc, /*validate=*/false);
  // unit axiom for the designated idempotent unit
  for (size_t i = 0; i < d; ++i) {
    Vec b = S.space.basis.row(i);
    if (parent.mul(unit, b) != b || parent.mul(b, unit) != b)
      throw std::invalid_argument("subalgebra: designated unit is not a unit on the span");
  }
  return S;
}

QuotientAlgebra quotient_algebra(const FinAlgebra& A, const Subspace& ideal) {
  if (ideal.contains(A.one)) throw std::invalid_argument("quotient_algebra: ideal contains 1");
  const GF& F = A.F;
  size_t d = A.dim;
  // complement = standard basis vectors at non-pivot columns of the ideal basis
  std::vector<bool> is_pivot(d, false);
  for (size_t r = 0; r < ideal.basis.rows; ++r) {
    size_t c = 0;
    while (c < d && ideal.basis.at(r, c) == 0) ++c;
    is_pivot[c] = true;
  }
  std::vector<size_t> comp;
  for (size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  size_t qd = comp.size();

  QuotientAlgebra Q;
  Q.proj = Mat(F, qd, d);
  Q.sect = Mat(F, d, qd);
  // reduce v modulo the ideal using its rref rows, then read the complement coords
  auto project = [&](const Vec& v) {
    Vec r = v;
    for (size_t row = 0; row < ideal.basis.rows; ++row) {
      size_t c = 0;
      while (c < d && ideal.basis.at(row, c) == 0) ++c;
      unsigned f = r[c];
      if (f)
        for (size_t j = 0; j < d; ++j) r[j] = F.sub(r[j], F.mul(f, ideal.basis.at(row, j)));
    }
    Vec out(qd, 0);
    for (size_t k = 0; k < qd; ++k) out[k] = r[comp[k]];
    return out;
  };
  for (size_t c = 0; c < d; ++c) {
    Vec e(d, 0);
    e[c] = 1;
    Vec pc = project(e);
    for (size_t k = 0; k < qd; ++k) Q.proj.at(k, c) = pc[k];
  }
  for (size_t k = 0; k < qd; ++k) Q.sect.at(comp[k], k) = 1;

  std::vector<Vec> prod(qd * qd);
  for (size_t i = 0; i < qd; ++i)
    for (size_t j = 0; j < qd; ++j) {
      Vec x(d, 0), y(d, 0);
      x[comp[i]] = 1;
      y[comp[j]] = 1;
      prod[i * qd + j] = project(A.mul(x, y));
    }
  Q.alg = FinAlgebra::build(F, qd, [&](size_t i, size_t j) { return prod[i * qd + j]; },
                            project(A.one), /*validate=*/false);
  return Q;
}

std::optional<Vec> algebra_inverse(const FinAlgebra& A, const Vec& x) {
  auto y = solve(A.left_mult(x), A.one);
  if (!y) return std::nullopt;
  if (A.mul(*y, x) != A.one) return std::nullopt;  // left inverse must also be right inverse
  return y;
}

bool is_unit(const FinAlgebra& A, const Vec& x) { return algebra_inverse(A, x).has_value(); }

bool is_idempotent(const FinAlgebra& A, const Vec& x) { return A.mul(x, x) == x; }

PolyQ minimal_polynomial(const FinAlgebra& A, const Vec& x) {
  std::vector<Vec> powers{A.one};
  while (true) {
    Mat M = Mat::from_rows(A.F, powers);
    Vec nxt = A.mul(powers.back(), x);
    auto c = solve(M.transpose(), nxt);
    if (c) {
      PolyQ f(powers.size() + 1, 0);
      for (size_t i = 0; i < powers.size(); ++i) f[i] = A.F.neg((*c)[i]);
      f[powers.size()] = 1;
      return f;
    }
    powers.push_back(nxt);
    if (powers.size() > A.dim + 1) throw std::logic_error("minimal_polynomial: no relation");
  }
}

Vec eval_poly(const FinAlgebra& A, const PolyQ& f, const Vec& x) {
  Vec r = A.zero();
  for (size_t i = f.size(); i-- > 0;) {
    r = A.mul(r, x);
    if (f[i]) r = vec_add(A.F, r, vec_scale(A.F, f[i], A.one));
  }
  return r;
}

Subspace center_subspace(const FinAlgebra& A) {
  size_t d = A.dim;
  Mat big(A.F, d * d, d);
  for (size_t i = 0; i < d; ++i) {
    Mat diff = A.left_mult(A.basis_vec(i)) - A.right_mult(A.basis_vec(i));
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) big.at(i * d + r, c) = diff.at(r, c);
  }
  return Subspace::span(A.F, d, nullspace(big).row_list());
}

Subspace fixed_subspace(const GF& F, size_t n, const std::vector<Mat>& action) {
  if (action.empty()) return Subspace::full(F, n);
  Mat big(F, action.size() * n, n);
  for (size_t k = 0; k < action.size(); ++k) {
    Mat diff = action[k] - Mat::identity(F, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) big.at(k * n + r, c) = diff.at(r, c);
  }
  return Subspace::span(F, n, nullspace(big).row_list());
}

// --- restriction of scalars ---

Vec fp_from_fq(const GF& F, const Vec& v) {
  Vec r(v.size() * F.m());
  for (size_t i = 0; i < v.size(); ++i)
    for (unsigned j = 0; j < F.m(); ++j) r[i * F.m() + j] = F.digit(v[i], j);
  return r;
}

Vec fq_from_fp(const GF& F, const Vec& v) {
  size_t d = v.size() / F.m();
  Vec r(d);
  for (size_t i = 0; i < d; ++i) {
    std::vector<unsigned> digits(v.begin() + i * F.m(), v.begin() + (i + 1) * F.m());
    r[i] = F.from_digits(digits);
  }
  return r;
}

Mat fp_matrix_of(const GF& F, size_t d, const std::function<Vec(const Vec&)>& f) {
  GF Fp(F.p(), 1);
  size_t n = d * F.m();
  Mat M(Fp, n, n);
  for (size_t i = 0; i < d; ++i)
    for (unsigned j = 0; j < F.m(); ++j) {
      Vec b(d, 0);
      std::vector<unsigned> digits(F.m(), 0);
      digits[j] = 1;
      b[i] = F.from_digits(digits);
      Vec img = fp_from_fq(F, f(b));
      for (size_t r = 0; r < n; ++r) M.at(r, i * F.m() + j) = img[r];
    }
  return M;
}

bool next_tuple(const GF& F, Vec& t) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (++t[i] < F.q()) return true;
    t[i] = 0;
  }
  return false;
}

// --- radical ---

namespace {

// F_q-subspace from an F_p-subspace of the restricted-scalars space; the span
// over F_q is correct whenever the underlying set is F_q-closed.
Subspace fq_span_of_fp_rows(const GF& F, size_t d, const Mat& fp_rows) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < fp_rows.rows; ++i) rows.push_back(fq_from_fp(F, fp_rows.row(i)));
  return Subspace::span(F, d, rows);
}

Subspace radical_commutative(const FinAlgebra& A) {
  // nilpotent elements = kernel of the F_p-linear map x -> x^(p^e), p^e >= dim
  unsigned long long pe = 1;
  while (pe < A.dim) pe *= A.F.p();
  Mat M = fp_matrix_of(A.F, A.dim, [&](const Vec& v) { return A.pow(v, pe); });
  Subspace J = fq_span_of_fp_rows(A.F, A.dim, nullspace(M));
  if (J.dim() * A.F.m() != static_cast<size_t>(nullspace(M).rows))
    throw std::logic_error("radical: nilpotent set not F_q-linear");
  return J;
}

using U64Mat = std::vector<uint64_t>;  // n x n row major

U64Mat u64_mul(const U64Mat& a, const U64Mat& b, size_t n, uint64_t mod) {
  U64Mat r(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      uint64_t v = a[i * n + k];
      if (!v) continue;
      for (size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + v * b[k * n + j]) % mod;
    }
  return r;
}

Subspace radical_trace_chain(const FinAlgebra& A) {
  const GF& F = A.F;
  GF Fp(F.p(), 1);
  size_t d = A.dim, n = d * F.m();

  // integer lift of the left regular representation over F_p
  auto lift_left = [&](const Vec& x) {
    U64Mat M(n * n, 0);
    for (size_t i = 0; i < d; ++i)
      for (unsigned j = 0; j < F.m(); ++j) {
        Vec b(d, 0);
        std::vector<unsigned> digits(F.m(), 0);
        digits[j] = 1;
        b[i] = F.from_digits(digits);
        Vec img = fp_from_fq(F, A.mul(x, b));
        for (size_t r = 0; r < n; ++r) M[r * n + i * F.m() + j] = img[r];
      }
    return M;
  };

  // current space: F_p rref basis over the restricted-scalars coordinates
  Subspace cur = Subspace::full(Fp, n);
  unsigned level = 0;
  unsigned long long plev = 1;  // p^level
  while (true) {
    size_t r = cur.dim();
    if (r == 0) break;
    uint64_t mod = plev * F.p();  // p^(level+1)
    Mat cond(Fp, r, r);           // cond[b][a] = scaled trace pairing
    std::vector<Vec> fq_basis(r);
    for (size_t i = 0; i < r; ++i) fq_basis[i] = fq_from_fp(F, cur.basis.row(i));
    for (size_t a = 0; a < r; ++a)
      for (size_t b = 0; b < r; ++b) {
        Vec z = A.mul(fq_basis[a], fq_basis[b]);
        U64Mat L = lift_left(z);
        for (auto& v : L) v %= mod;
        for (unsigned s = 0; s < level; ++s) {  // raise to the p-th power, level times
          U64Mat P = L;
          U64Mat acc;
          unsigned e = F.p();
          bool first = true;
          while (e) {
            if (e & 1) {
              acc = first ? P : u64_mul(acc, P, n, mod);
              first = false;
            }
            e >>= 1;
            if (e) P = u64_mul(P, P, n, mod);
          }
          L = acc;
        }
        uint64_t tr = 0;
        for (size_t t = 0; t < n; ++t) tr = (tr + L[t * n + t]) % mod;
        if (tr % plev != 0) throw std::logic_error("radical: trace chain divisibility fails");
        cond.at(b, a) = static_cast<unsigned>((tr / plev) % F.p());
      }
    Mat ker = nullspace(cond);
    std::vector<Vec> new_rows;
    for (size_t i = 0; i < ker.rows; ++i) {
      Vec v(n, 0);
      for (size_t a = 0; a < r; ++a)
        if (ker.at(i, a)) v = vec_add(Fp, v, vec_scale(Fp, ker.at(i, a), cur.basis.row(a)));
      new_rows.push_back(v);
    }
    cur = Subspace::span(Fp, n, new_rows);
    if (plev >= n) break;
    ++level;
    plev *= F.p();
  }

  if (cur.dim() % F.m() != 0)
    throw std::logic_error("radical: F_p-dimension not divisible by field degree");
  Subspace J = fq_span_of_fp_rows(F, d, cur.basis);
  if (J.dim() * F.m() != cur.dim()) throw std::logic_error("radical: result not F_q-linear");
  return J;
}

bool subspace_product_nilpotent(const FinAlgebra& A, Subspace I) {
  for (size_t it = 0; it < 64; ++it) {
    if (I.dim() == 0) return true;
    std::vector<Vec> prods;
    for (size_t a = 0; a < I.dim(); ++a)
      for (size_t b = 0; b < I.dim(); ++b)
        prods.push_back(A.mul(I.basis.row(a), I.basis.row(b)));
    Subspace nxt = Subspace::span(A.F, A.dim, prods);
    if (nxt == I) return false;
    I = nxt;
  }
  return false;
}

void verify_radical_candidate(const FinAlgebra& A, const Subspace& J) {
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t r = 0; r < J.dim(); ++r) {
      if (!J.contains(A.mul(A.basis_vec(i), J.basis.row(r))) ||
          !J.contains(A.mul(J.basis.row(r), A.basis_vec(i))))
        throw std::logic_error("radical: candidate is not a two-sided ideal");
    }
  if (!subspace_product_nilpotent(A, J)) throw std::logic_error("radical: candidate not nilpotent");
}

}  // namespace

Subspace radical(const FinAlgebra& A) {
  Subspace J = A.is_commutative() ? radical_commutative(A) : radical_trace_chain(A);
  verify_radical_candidate(A, J);
  return J;
}

Subspace radical_oracle(const FinAlgebra& A, unsigned long long cap) {
  double total = 1;
  for (size_t i = 0; i < A.dim; ++i) {
    total *= A.F.q();
    if (total > static_cast<double>(cap))
      throw instance_too_large("radical_oracle: algebra too large");
  }
  std::vector<Vec> members;
  Vec t(A.dim, 0);
  do {
    // two-sided ideal generated by t
    std::vector<Vec> gens{t};
    for (size_t i = 0; i < A.dim; ++i) {
      gens.push_back(A.mul(A.basis_vec(i), t));
      gens.push_back(A.mul(t, A.basis_vec(i)));
      for (size_t j = 0; j < A.dim; ++j)
        gens.push_back(A.mul(A.basis_vec(i), A.mul(t, A.basis_vec(j))));
    }
    Subspace I = Subspace::span(A.F, A.dim, gens);
    if (subspace_product_nilpotent(A, I)) members.push_back(t);
  } while (next_tuple(A.F, t));
  return Subspace::span(A.F, A.dim, members);
}

Vec lift_idempotent(const FinAlgebra& A, Vec x, const Subspace& J) {
  Vec defect = vec_sub(A.F, A.mul(x, x), x);
  if (!J.contains(defect)) throw std::invalid_argument("lift_idempotent: not idempotent mod J");
  for (int it = 0; it < 64; ++it) {
    if (is_idempotent(A, x)) return x;
    x = A.pow(x, A.F.p());
  }
  throw std::logic_error("lift_idempotent: did not converge");
}

// --- idempotent machinery ---

namespace {

// F_q-subspace of a commutative algebra fixed by x -> x^q
Subspace frobenius_fixed(const FinAlgebra& C) {
  Mat M = fp_matrix_of(C.F, C.dim, [&](const Vec& v) {
    return vec_sub(C.F, C.pow(v, C.F.q()), v);
  });
  return fq_span_of_fp_rows(C.F, C.dim, nullspace(M));
}

// Lagrange idempotent from an element whose minimal polynomial has >= 2 distinct
// roots in F_q (all roots in F_q, squarefree).
std::optional<Vec> lagrange_idempotent(const FinAlgebra& S, const Vec& w) {
  PolyQ m = minimal_polynomial(S, w);
  if (pq_deg(m) < 2) return std::nullopt;
  auto roots = pq_roots(S.F, m);
  if (roots.size() != static_cast<size_t>(pq_deg(m))) return std::nullopt;
  unsigned a0 = roots[0];
  Vec e = S.one;
  for (size_t i = 1; i < roots.size(); ++i) {
    unsigned c = S.F.inv(S.F.sub(a0, roots[i]));
    Vec factor = vec_sub(S.F, w, vec_scale(S.F, roots[i], S.one));
    e = S.mul(e, vec_scale(S.F, c, factor));
  }
  if (!is_idempotent(S, e) || vec_is_zero(e) || e == S.one)
    throw std::logic_error("lagrange_idempotent: construction failed");
  return e;
}

Vec nilpotent_to_idempotent(const FinAlgebra& S, Vec nu) {
  while (!vec_is_zero(S.mul(nu, nu))) nu = S.mul(nu, nu);
  if (vec_is_zero(nu)) throw std::logic_error("nilpotent_to_idempotent: zero input");
  // solve nu * X * nu = nu, linear in X
  Mat T = S.left_mult(nu) * S.right_mult(nu);
  auto x = solve(T, nu);
  if (!x) throw std::logic_error("nilpotent_to_idempotent: not von Neumann regular");
  Vec e = S.mul(nu, *x);
  if (!is_idempotent(S, e) || vec_is_zero(e) || e == S.one)
    throw std::logic_error("nilpotent_to_idempotent: bad idempotent");
  return e;
}

bool is_scalar_multiple_of_one(const FinAlgebra& S, const Vec& v) {
  Subspace line = Subspace::span(S.F, S.dim, {S.one});
  return line.contains(v);
}

// nontrivial idempotent of a commutative-or-simple analysis step applied to a
// semisimple algebra S; nullopt certifies S is a division algebra (here: field).
std::optional<Vec> split_semisimple(const FinAlgebra& S, uint64_t seed) {
  if (S.dim <= 1) return std::nullopt;
  Subspace Z = center_subspace(S);
  SubAlgebra Zs = subalgebra(S, Z.basis.row_list(), S.one);
  Subspace fixed = frobenius_fixed(Zs.alg);
  if (fixed.dim() >= 2) {
    for (size_t i = 0; i < fixed.dim(); ++i) {
      Vec w = Zs.up(fixed.basis.row(i));
      if (is_scalar_multiple_of_one(S, w)) continue;
      auto e = lagrange_idempotent(S, w);
      if (e) return e;
    }
    throw std::logic_error("split_semisimple: central split failed");
  }
  if (S.is_commutative() || Z.dim() == S.dim) return std::nullopt;  // field

  // simple noncommutative: S is a full matrix algebra over a field
  auto try_candidate = [&](const Vec& s) -> std::optional<Vec> {
    if (vec_is_zero(s) || is_scalar_multiple_of_one(S, s)) return std::nullopt;
    PolyQ m = minimal_polynomial(S, s);
    PolyQ rad = pq_squarefree_radical(S.F, m);
    if (pq_deg(rad) < pq_deg(m)) {
      Vec nu = eval_poly(S, rad, s);
      if (!vec_is_zero(nu)) return nilpotent_to_idempotent(S, nu);
      return std::nullopt;
    }
    // squarefree minimal polynomial: look inside the commutative algebra F_q[s]
    std::vector<Vec> pows{S.one};
    for (int k = 1; k <= pq_deg(m) - 1; ++k) pows.push_back(S.mul(pows.back(), s));
    SubAlgebra C = subalgebra(S, pows, S.one);
    Subspace cf = frobenius_fixed(C.alg);
    for (size_t i = 0; i < cf.dim(); ++i) {
      Vec w = C.up(cf.basis.row(i));
      if (is_scalar_multiple_of_one(S, w)) continue;
      auto e = lagrange_idempotent(S, w);
      if (e) return e;
    }
    return std::nullopt;
  };

  for (size_t i = 0; i < S.dim; ++i)
    if (auto e = try_candidate(S.basis_vec(i))) return e;
  for (size_t i = 0; i < S.dim; ++i)
    for (size_t j = i + 1; j < S.dim; ++j)
      if (auto e = try_candidate(vec_add(S.F, S.basis_vec(i), S.basis_vec(j)))) return e;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 3000; ++t) {
    Vec s(S.dim);
    for (auto& c : s) c = static_cast<unsigned>(rng() % S.F.q());
    if (auto e = try_candidate(s)) return e;
  }
  double total = 1;
  bool small = true;
  for (size_t i = 0; i < S.dim; ++i) {
    total *= S.F.q();
    if (total > 1u << 16) { small = false; break; }
  }
  if (small) {
    Vec t(S.dim, 0);
    do {
      if (auto e = try_candidate(t)) return e;
    } while (next_tuple(S.F, t));
  }
  throw std::logic_error("split_semisimple: no idempotent found in noncommutative algebra");
}

}  // namespace

std::optional<Vec> find_nontrivial_idempotent(const FinAlgebra& A, uint64_t seed) {
  if (A.dim <= 1) return std::nullopt;
  Subspace J = radical(A);
  if (J.dim() + 1 == A.dim) return std::nullopt;  // quotient is one-dimensional: local
  QuotientAlgebra Q = quotient_algebra(A, J);
  auto ebar = split_semisimple(Q.alg, seed);
  if (!ebar) return std::nullopt;
  Vec x0 = Q.sect.apply(*ebar);
  Vec e = lift_idempotent(A, x0, J);
  if (vec_is_zero(e) || e == A.one) throw std::logic_error("find_nontrivial_idempotent: trivial lift");
  return e;
}

bool is_local_algebra(const FinAlgebra& A, uint64_t seed) {
  return !find_nontrivial_idempotent(A, seed).has_value();
}

std::vector<Vec> primitive_idempotent_decomposition(const FinAlgebra& A, const Vec& e,
                                                    uint64_t seed) {
  if (!is_idempotent(A, e))
    throw std::invalid_argument("primitive_idempotent_decomposition: not an idempotent");
  if (vec_is_zero(e)) return {};
  std::vector<Vec> corner_rows;
  for (size_t i = 0; i < A.dim; ++i) corner_rows.push_back(A.mul(e, A.mul(A.basis_vec(i), e)));
  SubAlgebra B = subalgebra(A, corner_rows, e);
  auto f_in = find_nontrivial_idempotent(B.alg, seed);
  if (!f_in) return {e};
  Vec f = B.up(*f_in);
  Vec g = vec_sub(A.F, e, f);
  auto left = primitive_idempotent_decomposition(A, f, seed + 1);
  auto right = primitive_idempotent_decomposition(A, g, seed + 2);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

bool is_primitive_idempotent(const FinAlgebra& A, const Vec& e, uint64_t seed) {
  if (!is_idempotent(A, e) || vec_is_zero(e)) return false;
  std::vector<Vec> corner_rows;
  for (size_t i = 0; i < A.dim; ++i) corner_rows.push_back(A.mul(e, A.mul(A.basis_vec(i), e)));
  SubAlgebra B = subalgebra(A, corner_rows, e);
  return !find_nontrivial_idempotent(B.alg, seed).has_value();
}

std::vector<Vec> central_primitive_idempotents(const FinAlgebra& A, uint64_t seed) {
  Subspace Z = center_subspace(A);
  SubAlgebra Zs = subalgebra(A, Z.basis.row_list(), A.one);
  auto inner = primitive_idempotent_decomposition(Zs.alg, Zs.alg.one, seed);
  std::vector<Vec> out;
  for (const auto& v : inner) out.push_back(Zs.up(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Vec> idempotent_conjugacy(const FinAlgebra& A, const Vec& i, const Vec& j,
                                        uint64_t seed) {
  if (!is_idempotent(A, i) || !is_idempotent(A, j))
    throw std::invalid_argument("idempotent_conjugacy: inputs must be idempotent");
  if (i == j) return A.one;
  const GF& F = A.F;

  Subspace J = radical(A);
  QuotientAlgebra Q = quotient_algebra(A, J);
  auto zs = central_primitive_idempotents(Q.alg, seed);
  Vec ibar = Q.proj.apply(i), jbar = Q.proj.apply(j);
  auto fingerprint = [&](const Vec& ebar) {
    std::vector<size_t> fp;
    for (const auto& z : zs) {
      Vec ez = Q.alg.mul(ebar, z);
      std::vector<Vec> rows;
      for (size_t k = 0; k < Q.alg.dim; ++k) rows.push_back(Q.alg.mul(ez, Q.alg.basis_vec(k)));
      fp.push_back(Subspace::span(F, Q.alg.dim, rows).dim());
    }
    return fp;
  };
  if (fingerprint(ibar) != fingerprint(jbar)) return std::nullopt;

  Vec i2 = vec_sub(F, A.one, i), j2 = vec_sub(F, A.one, j);
  auto corner = [&](const Vec& a, const Vec& b) {
    std::vector<Vec> rows;
    for (size_t k = 0; k < A.dim; ++k) rows.push_back(A.mul(a, A.mul(A.basis_vec(k), b)));
    return Subspace::span(F, A.dim, rows);
  };
  auto right_module = [&](const Vec& a) {
    std::vector<Vec> rows;
    for (size_t k = 0; k < A.dim; ++k) rows.push_back(A.mul(a, A.basis_vec(k)));
    return Subspace::span(F, A.dim, rows);
  };
  Subspace W1 = corner(i, j), W2 = corner(i2, j2);
  Subspace jA = right_module(j), j2A = right_module(j2);

  // s in iAj acting by left multiplication as an isomorphism jA -> iA
  auto full_rank = [&](const Vec& s, const Subspace& dom) {
    std::vector<Vec> rows;
    for (size_t k = 0; k < dom.dim(); ++k) rows.push_back(A.mul(s, dom.basis.row(k)));
    return Subspace::span(F, A.dim, rows).dim() == dom.dim();
  };
  auto find_iso = [&](const Subspace& W, const Subspace& dom) -> std::optional<Vec> {
    if (dom.dim() == 0) return A.zero();
    for (size_t k = 0; k < W.dim(); ++k)
      if (full_rank(W.basis.row(k), dom)) return W.basis.row(k);
    for (size_t a = 0; a < W.dim(); ++a)
      for (size_t b = a + 1; b < W.dim(); ++b) {
        Vec s = vec_add(F, W.basis.row(a), W.basis.row(b));
        if (full_rank(s, dom)) return s;
      }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < 2000; ++t) {
      Vec c(W.dim());
      for (auto& x : c) x = static_cast<unsigned>(rng() % F.q());
      Vec s(A.dim, 0);
      for (size_t k = 0; k < W.dim(); ++k)
        if (c[k]) s = vec_add(F, s, vec_scale(F, c[k], W.basis.row(k)));
      if (!vec_is_zero(s) && full_rank(s, dom)) return s;
    }
    double total = 1;
    for (size_t k = 0; k < W.dim(); ++k) {
      total *= F.q();
      if (total > 1u << 16) return std::nullopt;
    }
    Vec c(W.dim(), 0);
    while (next_tuple(F, c)) {
      Vec s(A.dim, 0);
      for (size_t k = 0; k < W.dim(); ++k)
        if (c[k]) s = vec_add(F, s, vec_scale(F, c[k], W.basis.row(k)));
      if (full_rank(s, dom)) return s;
    }
    return std::nullopt;
  };

  auto s = find_iso(W1, jA);
  auto t = vec_is_zero(i2) ? std::optional<Vec>(A.zero()) : find_iso(W2, j2A);
  if (!s || !t) throw std::logic_error("idempotent_conjugacy: failed to construct conjugator");
  Vec q = vec_add(F, *s, *t);
  auto qi = algebra_inverse(A, q);
  if (!qi) throw std::logic_error("idempotent_conjugacy: conjugator not a unit");
  if (A.mul(A.mul(q, j), *qi) != i)
    throw std::logic_error("idempotent_conjugacy: conjugation check failed");
  return q;
}

UnitSearchResult unit_in_subspace(const FinAlgebra& A, const Subspace& V, uint64_t seed,
                                  unsigned long long exhaustive_cap,
                                  unsigned long long random_trials) {
  UnitSearchResult res;
  res.status = UnitSearchStatus::undetermined;
  const GF& F = A.F;
  auto combo = [&](const Vec& c) {
    Vec s(A.dim, 0);
    for (size_t k = 0; k < V.dim(); ++k)
      if (c[k]) s = vec_add(F, s, vec_scale(F, c[k], V.basis.row(k)));
    return s;
  };
  double total = 1;
  bool exhaustive = true;
  for (size_t k = 0; k < V.dim(); ++k) {
    total *= F.q();
    if (total > static_cast<double>(exhaustive_cap)) { exhaustive = false; break; }
  }
  if (exhaustive) {
    Vec c(V.dim(), 0);
    do {
      ++res.tried;
      Vec s = combo(c);
      auto inv = algebra_inverse(A, s);
      if (inv) {
        res.status = UnitSearchStatus::found;
        res.witness = s;
        res.witness_inverse = *inv;
        return res;
      }
    } while (next_tuple(F, c));
    res.status = UnitSearchStatus::none_exhaustive;
    return res;
  }
  std::mt19937_64 rng(seed);
  for (unsigned long long t = 0; t < random_trials; ++t) {
    Vec c(V.dim());
    for (auto& x : c) x = static_cast<unsigned>(rng() % F.q());
    ++res.tried;
    Vec s = combo(c);
    auto inv = algebra_inverse(A, s);
    if (inv) {
      res.status = UnitSearchStatus::found;
      res.witness = s;
      res.witness_inverse = *inv;
      return res;
    }
  }
  return res;
}

// --- interchange ---

std::string algebra_to_json(const FinAlgebra& A, const std::string& name) {
  nlohmann::ordered_json j;
  j["dim"] = A.dim;
  j["m"] = A.F.m();
  j["modulus"] = A.F.modulus();
  j["name"] = name;
  j["one"] = A.one;
  nlohmann::ordered_json triples = nlohmann::ordered_json::array();
  for (size_t a = 0; a < A.dim; ++a)
    for (size_t b = 0; b < A.dim; ++b) {
      const Vec& t = A.table[a * A.dim + b];
      for (size_t k = 0; k < A.dim; ++k)
        if (t[k]) triples.push_back({a, b, k, t[k]});
    }
  j["p"] = A.F.p();
  j["structure"] = triples;
  return j.dump(2) + "\n";
}

FinAlgebra algebra_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GF F(j.at("p").get<unsigned>(), j.at("m").get<unsigned>());
  if (j.contains("modulus") && j.at("modulus").get<std::vector<unsigned>>() != F.modulus())
    throw std::invalid_argument("algebra_from_json: non-canonical field modulus");
  size_t d = j.at("dim").get<size_t>();
  std::vector<Vec> table(d * d, Vec(d, 0));
  for (const auto& t : j.at("structure")) {
    size_t a = t.at(0).get<size_t>(), b = t.at(1).get<size_t>(), k = t.at(2).get<size_t>();
    table[a * d + b][k] = t.at(3).get<unsigned>();
  }
  Vec one = j.at("one").get<Vec>();
  return FinAlgebra::build(F, d, [&](size_t a, size_t b) { return table[a * d + b]; }, one);
}

}  // namespace blocklab
