#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blocklab/mat.hpp"
#include "blocklab/polyq.hpp"

namespace blocklab {

// Finite-dimensional associative unital F_q-algebra given by structure constants.
// Elements are coordinate vectors in the fixed basis b_0..b_{d-1}.
struct FinAlgebra {
  GF F;
  size_t dim = 0;
  std::vector<Vec> table;  // table[i*dim+j] = b_i * b_j
  Vec one;

  static FinAlgebra build(GF F, size_t dim,
                          const std::function<Vec(size_t, size_t)>& mul_basis,
                          const Vec& unit, bool validate = true);

  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis_mul(size_t i, size_t j) const { return table[i * dim + j]; }
  Vec zero() const { return Vec(dim, 0); }
  Vec basis_vec(size_t i) const;
  Vec pow(Vec x, unsigned long long e) const;
  Mat left_mult(const Vec& x) const;   // y -> x*y
  Mat right_mult(const Vec& x) const;  // y -> y*x
  bool is_commutative() const;
  void check_axioms() const;  // throws on failure
};

// Subalgebra presented on its own basis with maps to/from the parent coordinates.
struct SubAlgebra {
  FinAlgebra alg;
  Subspace space;  // inside parent
  Vec up(const Vec& inner) const;                  // inner coords -> parent coords
  std::optional<Vec> down(const Vec& outer) const; // parent coords -> inner coords
};

// basis rows span a subspace of parent closed under multiplication and
// containing `unit` (which becomes the subalgebra unit; it need not be parent 1).
SubAlgebra subalgebra(const FinAlgebra& parent, const std::vector<Vec>& basis_rows,
                      const Vec& unit);

struct QuotientAlgebra {
  FinAlgebra alg;
  Mat proj;  // parent coords -> quotient coords
  Mat sect;  // quotient coords -> parent coords (linear section)
};

// ideal must be a two-sided ideal not containing 1.
QuotientAlgebra quotient_algebra(const FinAlgebra& A, const Subspace& ideal);

std::optional<Vec> algebra_inverse(const FinAlgebra& A, const Vec& x);
bool is_unit(const FinAlgebra& A, const Vec& x);
bool is_idempotent(const FinAlgebra& A, const Vec& x);
PolyQ minimal_polynomial(const FinAlgebra& A, const Vec& x);  // monic
Vec eval_poly(const FinAlgebra& A, const PolyQ& f, const Vec& x);

Subspace center_subspace(const FinAlgebra& A);
// common fixed space of a list of square matrices acting on F_q^n
Subspace fixed_subspace(const GF& F, size_t n, const std::vector<Mat>& action);

// Jacobson radical. Uses the Frobenius-kernel method in the commutative case and
// the trace-chain method in characteristic p in general; the result is verified
// to be a nilpotent two-sided ideal.
Subspace radical(const FinAlgebra& A);
// Exhaustive oracle for tiny algebras (q^dim bounded): the set of elements whose
// two-sided ideal is nilpotent.
Subspace radical_oracle(const FinAlgebra& A, unsigned long long cap = 1u << 20);

// Given a idempotent modulo the radical (x^2 - x in J), return an actual
// idempotent congruent to x mod J.
Vec lift_idempotent(const FinAlgebra& A, Vec x, const Subspace& J);

// Nontrivial idempotent of A, or nullopt if A is local. A need not be semisimple.
std::optional<Vec> find_nontrivial_idempotent(const FinAlgebra& A, uint64_t seed);
bool is_local_algebra(const FinAlgebra& A, uint64_t seed = 1);

// Orthogonal primitive idempotents summing to e (e idempotent, possibly 1).
std::vector<Vec> primitive_idempotent_decomposition(const FinAlgebra& A, const Vec& e,
                                                    uint64_t seed = 1);
bool is_primitive_idempotent(const FinAlgebra& A, const Vec& e, uint64_t seed = 1);

// Unit q with q j q^{-1} = i, or nullopt if i, j are not conjugate.
std::optional<Vec> idempotent_conjugacy(const FinAlgebra& A, const Vec& i, const Vec& j,
                                        uint64_t seed = 1);

// Central primitive idempotents of A (the block decomposition of 1 in Z(A)).
std::vector<Vec> central_primitive_idempotents(const FinAlgebra& A, uint64_t seed = 1);

enum class UnitSearchStatus { found, none_exhaustive, undetermined };

struct UnitSearchResult {
  UnitSearchStatus status;
  Vec witness;             // element of the subspace, when found
  Vec witness_inverse;     // inverse in A, when found
  unsigned long long tried = 0;
};

// Search the given subspace of A for a unit of A. Exhaustive (certified) when
// q^dim(V) <= exhaustive_cap, otherwise seeded random sampling.
UnitSearchResult unit_in_subspace(const FinAlgebra& A, const Subspace& V, uint64_t seed = 1,
                                  unsigned long long exhaustive_cap = 1u << 20,
                                  unsigned long long random_trials = 5000);

// --- restriction of scalars helpers (F_q^d <-> F_p^{d*m}) ---
Vec fp_from_fq(const GF& F, const Vec& v);
Vec fq_from_fp(const GF& F, const Vec& v);
// F_p-matrix of an F_p-linear (e.g. semilinear over F_q) map given on F_q-vectors
Mat fp_matrix_of(const GF& F, size_t d, const std::function<Vec(const Vec&)>& f);

// Iterate over all coefficient vectors of length n over F_q (odometer order).
bool next_tuple(const GF& F, Vec& t);

// --- interchange format ---
std::string algebra_to_json(const FinAlgebra& A, const std::string& name);
FinAlgebra algebra_from_json(const std::string& text);

}  // namespace blocklab
