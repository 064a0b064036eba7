#pragma once

#include <vector>

#include "blocklab/gf.hpp"

namespace blocklab {

// Polynomials over F_q as coefficient vectors, low degree first, no trailing zeros.
using PolyQ = std::vector<unsigned>;

void pq_trim(PolyQ& f);
int pq_deg(const PolyQ& f);  // -1 for zero
PolyQ pq_add(const GF& F, const PolyQ& a, const PolyQ& b);
PolyQ pq_mul(const GF& F, const PolyQ& a, const PolyQ& b);
PolyQ pq_scale(const GF& F, unsigned c, const PolyQ& a);
// division with remainder, b nonzero
std::pair<PolyQ, PolyQ> pq_divmod(const GF& F, const PolyQ& a, const PolyQ& b);
PolyQ pq_gcd(const GF& F, PolyQ a, PolyQ b);  // monic
PolyQ pq_derivative(const GF& F, const PolyQ& a);
PolyQ pq_monic(const GF& F, const PolyQ& a);
// u*a + v*b = gcd(a,b)
PolyQ pq_ext_gcd(const GF& F, const PolyQ& a, const PolyQ& b, PolyQ& u, PolyQ& v);
// largest squarefree divisor with the same irreducible factors
PolyQ pq_squarefree_radical(const GF& F, const PolyQ& f);
std::vector<unsigned> pq_roots(const GF& F, const PolyQ& f);

}  // namespace blocklab
