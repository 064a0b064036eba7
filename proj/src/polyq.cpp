#include "blocklab/polyq.hpp"

#include <stdexcept>

namespace blocklab {

void pq_trim(PolyQ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int pq_deg(const PolyQ& f) { return static_cast<int>(f.size()) - 1; }

PolyQ pq_add(const GF& F, const PolyQ& a, const PolyQ& b) {
  PolyQ r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    unsigned x = i < a.size() ? a[i] : 0;
    unsigned y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  pq_trim(r);
  return r;
}

PolyQ pq_mul(const GF& F, const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  pq_trim(r);
  return r;
}

PolyQ pq_scale(const GF& F, unsigned c, const PolyQ& a) {
  PolyQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  pq_trim(r);
  return r;
}

std::pair<PolyQ, PolyQ> pq_divmod(const GF& F, const PolyQ& a, const PolyQ& b) {
  if (b.empty()) throw std::invalid_argument("pq_divmod: division by zero");
  PolyQ rem = a, quot;
  pq_trim(rem);
  if (rem.size() >= b.size()) quot.assign(rem.size() - b.size() + 1, 0);
  unsigned lead_inv = F.inv(b.back());
  while (rem.size() >= b.size() && !rem.empty()) {
    size_t shift = rem.size() - b.size();
    unsigned c = F.mul(rem.back(), lead_inv);
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b[i]));
    pq_trim(rem);
  }
  pq_trim(quot);
  return {quot, rem};
}

PolyQ pq_monic(const GF& F, const PolyQ& a) {
  if (a.empty()) return a;
  return pq_scale(F, F.inv(a.back()), a);
}

PolyQ pq_gcd(const GF& F, PolyQ a, PolyQ b) {
  pq_trim(a);
  pq_trim(b);
  while (!b.empty()) {
    PolyQ r = pq_divmod(F, a, b).second;
    a = b;
    b = r;
  }
  return pq_monic(F, a);
}

PolyQ pq_derivative(const GF& F, const PolyQ& a) {
  PolyQ r;
  for (size_t i = 1; i < a.size(); ++i) {
    unsigned c = 0;
    for (size_t k = 0; k < i % F.p(); ++k) c = F.add(c, a[i]);
    r.push_back(c);
  }
  pq_trim(r);
  return r;
}

PolyQ pq_ext_gcd(const GF& F, const PolyQ& a, const PolyQ& b, PolyQ& u, PolyQ& v) {
  PolyQ r0 = a, r1 = b;
  pq_trim(r0);
  pq_trim(r1);
  PolyQ u0 = {1}, v0 = {}, u1 = {}, v1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = pq_divmod(F, r0, r1);
    PolyQ u2 = pq_add(F, u0, pq_scale(F, F.neg(1), pq_mul(F, q, u1)));
    PolyQ v2 = pq_add(F, v0, pq_scale(F, F.neg(1), pq_mul(F, q, v1)));
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (!r0.empty()) {
    unsigned c = F.inv(r0.back());
    r0 = pq_scale(F, c, r0);
    u0 = pq_scale(F, c, u0);
    v0 = pq_scale(F, c, v0);
  }
  u = u0;
  v = v0;
  return r0;
}

PolyQ pq_squarefree_radical(const GF& F, const PolyQ& f) {
  PolyQ g = pq_monic(F, f);
  if (pq_deg(g) <= 0) return g;
  PolyQ d = pq_derivative(F, g);
  if (d.empty()) {
    // g(t) = h(t^p); p-th roots of coefficients via the inverse Frobenius
    unsigned p = F.p(), m = F.m();
    PolyQ h;
    for (size_t i = 0; i < g.size(); i += p) {
      unsigned c = g[i];
      for (unsigned k = 0; k + 1 < m; ++k) c = F.frobenius(c);  // c^(p^(m-1)) = p-th root
      h.push_back(c);
    }
    pq_trim(h);
    return pq_squarefree_radical(F, h);
  }
  PolyQ gg = pq_gcd(F, g, d);
  if (pq_deg(gg) == 0) return g;
  PolyQ part = pq_divmod(F, g, gg).first;          // squarefree, misses factors with e % p == 0
  PolyQ rest = gg;
  // strip the already-found squarefree part out of the remaining gcd
  while (true) {
    PolyQ c = pq_gcd(F, rest, part);
    if (pq_deg(c) == 0) break;
    rest = pq_divmod(F, rest, c).first;
  }
  if (pq_deg(rest) <= 0) return pq_monic(F, part);
  return pq_monic(F, pq_mul(F, part, pq_squarefree_radical(F, rest)));
}

std::vector<unsigned> pq_roots(const GF& F, const PolyQ& f) {
  std::vector<unsigned> roots;
  for (unsigned x = 0; x < F.q(); ++x) {
    unsigned acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace blocklab
