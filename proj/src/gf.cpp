#include "blocklab/gf.hpp"

#include <numeric>
#include <stdexcept>

namespace blocklab {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// dense polynomial over F_p, coefficient vector, low degree first
using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  unsigned lead_inv = 1;
  // f monic by construction
  while (a.size() >= f.size()) {
    unsigned c = a.back() * lead_inv % p;
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - c * f[i] % p) % p;
    trim(a);
  }
  return a;
}

bool poly_irreducible(const Poly& f, unsigned p) {
  // trial division by every monic polynomial of degree <= deg(f)/2
  unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      unsigned long long c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

unsigned encode(const Poly& f, unsigned p) {
  unsigned v = 0;
  for (size_t i = f.size(); i-- > 0;) v = v * p + f[i];
  return v;
}

Poly decode(unsigned v, unsigned p, unsigned m) {
  Poly f(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    f[i] = v % p;
    v /= p;
  }
  trim(f);
  return f;
}

}  // namespace

GF::GF(unsigned p, unsigned m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("GF: p must be prime");
  if (m == 0) throw std::invalid_argument("GF: m must be positive");
  q_ = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q_ > (1u << 20) / p) throw std::invalid_argument("GF: field too large");
    q_ *= p;
  }
  // lexicographically least monic irreducible of degree m
  if (m == 1) {
    irred_ = {0, 1};
  } else {
    for (unsigned code = 0;; ++code) {
      if (code >= q_) throw std::logic_error("GF: no irreducible found");
      Poly f = decode(code, p, m);
      f.resize(m, 0);
      f.push_back(1);
      if (poly_irreducible(f, p)) {
        irred_ = f;
        break;
      }
    }
  }
  auto t = std::make_shared<Tables>();
  t->mul.resize(static_cast<size_t>(q_) * q_);
  for (unsigned a = 0; a < q_; ++a)
    for (unsigned b = 0; b < q_; ++b)
      t->mul[static_cast<size_t>(a) * q_ + b] = mul_slow(a, b);
  t->inv.assign(q_, 0);
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (t->mul[static_cast<size_t>(a) * q_ + b] == 1) {
        t->inv[a] = b;
        break;
      }
  tables_ = std::move(t);
}

unsigned GF::mul_slow(unsigned a, unsigned b) const {
  Poly pa = decode(a, p_, m_), pb = decode(b, p_, m_);
  Poly c = poly_mod(poly_mul(pa, pb, p_), irred_, p_);
  return encode(c, p_);
}

unsigned GF::add(unsigned a, unsigned b) const {
  unsigned r = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

unsigned GF::neg(unsigned a) const {
  unsigned r = 0, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

unsigned GF::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned GF::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("GF: division by zero");
  return tables_->inv[a];
}

unsigned GF::pow(unsigned a, unsigned long long e) const {
  unsigned r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

unsigned GF::digit(unsigned a, unsigned i) const {
  for (unsigned j = 0; j < i; ++j) a /= p_;
  return a % p_;
}

unsigned GF::from_digits(const std::vector<unsigned>& d) const {
  unsigned v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return v;
}

std::string GF::show(unsigned a) const {
  if (m_ == 1) return std::to_string(a);
  std::string s;
  bool first = true;
  for (unsigned i = 0; i < m_; ++i) {
    unsigned c = digit(a, i);
    if (!c) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0 || c > 1) s += std::to_string(c);
    if (i == 1) s += "t";
    if (i > 1) s += "t^" + std::to_string(i);
  }
  return first ? "0" : s;
}

unsigned GF::order_mod(unsigned p, unsigned n) {
  if (n <= 1) return 1;
  if (std::gcd(p, n) != 1) throw std::invalid_argument("order_mod: gcd(p,n) != 1");
  unsigned v = p % n, ord = 1;
  while (v != 1) {
    v = v * p % n;
    ++ord;
  }
  return ord;
}

GF GF::splitting_field(unsigned p, unsigned group_exponent) {
  unsigned e = group_exponent;
  while (e % p == 0) e /= p;
  return GF(p, order_mod(p, e));
}

}  // namespace blocklab
