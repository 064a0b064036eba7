#pragma once

#include <optional>
#include <vector>

#include "blocklab/gf.hpp"

namespace blocklab {

using Vec = std::vector<unsigned>;  // coordinate vector over a GF

// Dense matrix over F_q. Row major.
struct Mat {
  GF F;
  size_t rows = 0, cols = 0;
  std::vector<unsigned> a;

  Mat() = default;
  Mat(GF f, size_t r, size_t c) : F(f), rows(r), cols(c), a(r * c, 0) {}

  unsigned& at(size_t i, size_t j) { return a[i * cols + j]; }
  unsigned at(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(GF f, size_t n);
  static Mat from_rows(GF f, const std::vector<Vec>& rows);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Vec row(size_t i) const;
  std::vector<Vec> row_list() const;
  Vec apply(const Vec& v) const;        // M v (v as column)
  Vec apply_left(const Vec& v) const;   // v M (v as row)
  Mat transpose() const;
  bool is_permutation() const;  // exactly one 1 per row/col, rest 0
  bool is_zero() const;
};

// In-place reduced row echelon form; returns pivot column list.
std::vector<size_t> rref(Mat& m);
size_t rank(Mat m);
unsigned det(Mat m);
std::optional<Mat> inverse(Mat m);
// rows of the result span the right kernel {x : M x = 0}
Mat nullspace(const Mat& m);
// solve M x = b; nullopt if inconsistent
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Subspace of F_q^n, basis in canonical reduced row echelon form.
struct Subspace {
  GF F;
  size_t ambient = 0;
  Mat basis;  // rref rows, no zero rows

  Subspace() = default;
  static Subspace span(GF f, size_t ambient, const std::vector<Vec>& vectors);
  static Subspace zero(GF f, size_t ambient);
  static Subspace full(GF f, size_t ambient);

  size_t dim() const { return basis.rows; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // coordinates of v in the rref basis; nullopt if not in the subspace
  std::optional<Vec> coordinates(const Vec& v) const;
  bool operator==(const Subspace& o) const { return basis == o.basis; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
};

Vec vec_add(const GF& F, const Vec& a, const Vec& b);
Vec vec_sub(const GF& F, const Vec& a, const Vec& b);
Vec vec_scale(const GF& F, unsigned c, const Vec& a);
bool vec_is_zero(const Vec& a);

}  // namespace blocklab
