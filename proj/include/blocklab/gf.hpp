#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blocklab {

// Finite field F_{p^m}. Elements are encoded as unsigned integers < p^m,
// the base-p digits being the coefficients of a polynomial in the generator t,
// reduced modulo a fixed monic irreducible of degree m (lexicographically
// least, so the encoding is canonical for a given (p, m)).
class GF {
public:
  GF() = default;
  GF(unsigned p, unsigned m);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return irred_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned sub(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const { return tables_->mul[a * q_ + b]; }
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long long e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }
  // a = sum a_i t^i with a_i in F_p; digit access for restriction of scalars
  unsigned digit(unsigned a, unsigned i) const;
  unsigned from_digits(const std::vector<unsigned>& d) const;

  unsigned one() const { return 1; }
  bool operator==(const GF& o) const { return p_ == o.p_ && m_ == o.m_; }
  bool operator!=(const GF& o) const { return !(*this == o); }

  std::string show(unsigned a) const;

  // multiplicative order of p modulo n (n coprime to p)
  static unsigned order_mod(unsigned p, unsigned n);
  // splitting field of kG in characteristic p: m = ord of p mod p'-part of e
  static GF splitting_field(unsigned p, unsigned group_exponent);

private:
  unsigned p_ = 0, m_ = 0, q_ = 0;
  std::vector<unsigned> irred_;  // coefficients, degree m, monic
  struct Tables {
    std::vector<unsigned> mul;
    std::vector<unsigned> inv;
  };
  std::shared_ptr<const Tables> tables_;

  unsigned mul_slow(unsigned a, unsigned b) const;
};

bool is_prime(unsigned n);

}  // namespace blocklab
