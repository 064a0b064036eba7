#include "blocklab/mat.hpp"

#include <stdexcept>

namespace blocklab {

Mat Mat::identity(GF f, size_t n) {
  Mat m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(GF f, const std::vector<Vec>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw std::invalid_argument("Mat::mul: shape mismatch");
  Mat r(F, rows, o.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      unsigned v = at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < o.cols; ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(v, o.at(k, j)));
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = F.add(r.a[i], o.a[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = F.sub(r.a[i], o.a[i]);
  return r;
}

Vec Mat::row(size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> r;
  r.reserve(rows);
  for (size_t i = 0; i < rows; ++i) r.push_back(row(i));
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols) throw std::invalid_argument("Mat::apply: size mismatch");
  Vec r(rows, 0);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (at(i, j) && v[j]) r[i] = F.add(r[i], F.mul(at(i, j), v[j]));
  return r;
}

Vec Mat::apply_left(const Vec& v) const {
  if (v.size() != rows) throw std::invalid_argument("Mat::apply_left: size mismatch");
  Vec r(cols, 0);
  for (size_t i = 0; i < rows; ++i) {
    if (!v[i]) continue;
    for (size_t j = 0; j < cols; ++j)
      if (at(i, j)) r[j] = F.add(r[j], F.mul(v[i], at(i, j)));
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(F, cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_permutation() const {
  if (rows != cols) return false;
  std::vector<int> colhit(cols, 0);
  for (size_t i = 0; i < rows; ++i) {
    int ones = 0;
    for (size_t j = 0; j < cols; ++j) {
      unsigned v = at(i, j);
      if (v == 1) {
        ++ones;
        colhit[j]++;
      } else if (v != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (int h : colhit)
    if (h != 1) return false;
  return true;
}

bool Mat::is_zero() const {
  for (unsigned v : a)
    if (v) return false;
  return true;
}

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    unsigned iv = m.F.inv(m.at(r, c));
    for (size_t j = 0; j < m.cols; ++j) m.at(r, j) = m.F.mul(iv, m.at(r, j));
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      unsigned f = m.at(i, c);
      if (!f) continue;
      for (size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = m.F.sub(m.at(i, j), m.F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

unsigned det(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  const GF& F = m.F;
  unsigned d = 1;
  for (size_t c = 0; c < m.cols; ++c) {
    size_t sel = c;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) return 0;
    if (sel != c) {
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(c, c));
    unsigned iv = F.inv(m.at(c, c));
    for (size_t i = c + 1; i < m.rows; ++i) {
      unsigned f = F.mul(iv, m.at(i, c));
      if (!f) continue;
      for (size_t j = c; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(c, j)));
    }
  }
  return d;
}

std::optional<Mat> inverse(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  size_t n = m.rows;
  Mat aug(m.F, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() != n || piv.back() >= n) return std::nullopt;
  Mat r(m.F, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

Mat nullspace(const Mat& m) {
  Mat e = m;
  auto pivots = rref(e);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (size_t k = 0; k < pivots.size(); ++k) pivot_of_col[pivots[k]] = static_cast<int>(k);
  std::vector<Vec> basis;
  for (size_t c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(m.cols, 0);
    v[c] = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = m.F.neg(e.at(k, c));
    basis.push_back(v);
  }
  return Mat::from_rows(m.F, basis);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve: size mismatch");
  Mat aug(m.F, m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  Vec x(m.cols, 0);
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at(k, m.cols);
  return x;
}

Subspace Subspace::span(GF f, size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s;
  s.F = f;
  s.ambient = ambient;
  Mat m = Mat::from_rows(f, vectors);
  m.cols = ambient;  // handles empty vector list
  if (vectors.empty()) m = Mat(f, 0, ambient);
  auto piv = rref(m);
  Mat b(f, piv.size(), ambient);
  for (size_t i = 0; i < piv.size(); ++i)
    for (size_t j = 0; j < ambient; ++j) b.at(i, j) = m.at(i, j);
  s.basis = b;
  return s;
}

Subspace Subspace::zero(GF f, size_t ambient) { return span(f, ambient, {}); }

Subspace Subspace::full(GF f, size_t ambient) {
  return span(f, ambient, Mat::identity(f, ambient).row_list());
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient) throw std::invalid_argument("Subspace: ambient mismatch");
  Vec r = v;
  Vec coeff(basis.rows, 0);
  for (size_t row = 0; row < basis.rows; ++row) {
    size_t c = 0;
    while (c < ambient && basis.at(row, c) == 0) ++c;
    if (c == ambient) continue;
    unsigned f = r[c];
    if (f) {
      coeff[row] = f;  // pivot entry is 1 in rref
      for (size_t j = 0; j < ambient; ++j) r[j] = F.sub(r[j], F.mul(f, basis.at(row, j)));
    }
  }
  if (!vec_is_zero(r)) return std::nullopt;
  return coeff;
}

bool Subspace::contains(const Subspace& o) const {
  for (size_t i = 0; i < o.basis.rows; ++i)
    if (!contains(o.basis.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  auto rows = basis.row_list();
  auto rows2 = o.basis.row_list();
  rows.insert(rows.end(), rows2.begin(), rows2.end());
  return span(F, ambient, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Zassenhaus: row-reduce [B B; C 0], intersection read off the lower block
  size_t n = ambient;
  size_t r1 = basis.rows, r2 = o.basis.rows;
  Mat m(F, r1 + r2, 2 * n);
  for (size_t i = 0; i < r1; ++i)
    for (size_t j = 0; j < n; ++j) {
      m.at(i, j) = basis.at(i, j);
      m.at(i, n + j) = basis.at(i, j);
    }
  for (size_t i = 0; i < r2; ++i)
    for (size_t j = 0; j < n; ++j) m.at(r1 + i, j) = o.basis.at(i, j);
  rref(m);
  std::vector<Vec> inter;
  for (size_t i = 0; i < m.rows; ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < n; ++j)
      if (m.at(i, j)) left_zero = false;
    if (!left_zero) continue;
    Vec v(n);
    for (size_t j = 0; j < n; ++j) v[j] = m.at(i, n + j);
    if (!vec_is_zero(v)) inter.push_back(v);
  }
  return span(F, ambient, inter);
}

Vec vec_add(const GF& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const GF& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const GF& F, unsigned c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (unsigned v : a)
    if (v) return false;
  return true;
}

}  // namespace blocklab
