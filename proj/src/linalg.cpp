#include "hopfint/linalg.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfint {

Matrix::Matrix(const FieldPtr& f, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(f),
      e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldPtr& f, std::size_t n) {
  Matrix m(f, n, n);
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& f, const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(errc::dim_mismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(e_.begin() + (long)(r * cols_), e_.begin() + (long)((r + 1) * cols_));
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? ", " : "") << at(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// kernels

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(errc::dim_mismatch, "matmul shapes");
  if (!(*a.field() == *b.field()))
    throw Error(errc::field_mismatch, "matmul fields");
  Matrix r(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(errc::dim_mismatch, "matmul shapes");
  if (!(*a.field() == *b.field()))
    throw Error(errc::field_mismatch, "matmul fields");
  Matrix r(a.field(), a.rows(), b.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long ii = 0; ii < (long long)a.rows(); ++ii) {
    std::size_t i = (std::size_t)ii;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  }
  return r;
}

Vec matvec(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw Error(errc::dim_mismatch, "matvec shapes");
  Vec r = zero_vec(a.field(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& v = a.at(i, j);
      if (!v.is_zero() && !x[j].is_zero()) r[i] = r[i] + v * x[j];
    }
  return r;
}

Vec vecmat(const Vec& x, const Matrix& a) {
  if (a.rows() != x.size()) throw Error(errc::dim_mismatch, "vecmat shapes");
  Vec r = zero_vec(a.field(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& v = a.at(i, j);
      if (!v.is_zero()) r[j] = r[j] + x[i] * v;
    }
  }
  return r;
}

namespace {

template <bool Parallel>
std::vector<std::size_t> rref_impl(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0; // next pivot row
  for (std::size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    // topmost nonzero entry in column pc at or below pr
    std::size_t sel = m.rows();
    for (std::size_t r = pr; r < m.rows(); ++r)
      if (!m.at(r, pc).is_zero()) {
        sel = r;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.at(sel, c), m.at(pr, c));
    // normalize pivot row
    Scalar inv = m.at(pr, pc).inverse();
    for (std::size_t c = pc; c < m.cols(); ++c)
      if (!m.at(pr, c).is_zero()) m.at(pr, c) = m.at(pr, c) * inv;
    // eliminate everywhere else; rows are independent
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (Parallel && m.rows() > 32)
#endif
    for (long long rr = 0; rr < (long long)m.rows(); ++rr) {
      std::size_t r = (std::size_t)rr;
      if (r == pr) continue;
      const Scalar& factor = m.at(r, pc);
      if (factor.is_zero()) continue;
      Scalar f = factor;
      for (std::size_t c = pc; c < m.cols(); ++c) {
        if (m.at(pr, c).is_zero()) continue;
        m.at(r, c) = m.at(r, c) - f * m.at(pr, c);
      }
    }
    pivots.push_back(pc);
    ++pr;
  }
  return pivots;
}

} // namespace

std::vector<std::size_t> rref_in_place(Matrix& m) { return rref_impl<true>(m); }
std::vector<std::size_t> rref_in_place_serial(Matrix& m) {
  return rref_impl<false>(m);
}

Matrix kronecker_serial(const Matrix& a, const Matrix& b) {
  if (!(*a.field() == *b.field()))
    throw Error(errc::field_mismatch, "kronecker fields");
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.at(j, l).is_zero()) continue;
          r.at(i * b.rows() + j, k * b.cols() + l) = a.at(i, k) * b.at(j, l);
        }
      }
  return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(*a.field() == *b.field()))
    throw Error(errc::field_mismatch, "kronecker fields");
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
  for (long long ii = 0; ii < (long long)a.rows(); ++ii)
    for (long long jj = 0; jj < (long long)b.rows(); ++jj) {
      std::size_t i = (std::size_t)ii, j = (std::size_t)jj;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.at(j, l).is_zero()) continue;
          r.at(i * b.rows() + j, k * b.cols() + l) = a.at(i, k) * b.at(j, l);
        }
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// derived operations

RrefResult rref_and_nullspace(const Matrix& m) {
  RrefResult res;
  res.rref = m;
  std::vector<std::size_t> pivots = rref_in_place(res.rref);
  res.rank = pivots.size();

  // kernel basis: one vector per free column
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  Scalar one = Scalar::one(m.field());
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[fc] = one;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = -res.rref.at(pi, fc);
    rows.push_back(std::move(v));
  }
  res.kernel = row_space(m.field(), m.cols(), rows);
  return res;
}

std::size_t rank(const Matrix& m) {
  Matrix t = m;
  return rref_in_place(t).size();
}

Subspace row_space(const FieldPtr& f, std::size_t ambient,
                   const std::vector<Vec>& rows) {
  Matrix m = Matrix::from_rows(f, rows);
  if (rows.empty()) m = Matrix(f, 0, ambient);
  std::vector<std::size_t> pivots = rref_in_place(m);
  Matrix basis(f, pivots.size(), ambient);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) basis.at(r, c) = m.at(r, c);
  return Subspace{ambient, std::move(basis)};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw Error(errc::ambient_mismatch, "subspace sum");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis.row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) rows.push_back(b.basis.row(r));
  const FieldPtr& f = a.dim() ? a.basis.field() : b.basis.field();
  if (!f) throw Error(errc::field_mismatch, "sum of two empty subspaces needs a field");
  return row_space(f, a.ambient, rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw Error(errc::ambient_mismatch, "subspace intersect");
  const FieldPtr& f = a.basis.field() ? a.basis.field() : b.basis.field();
  // annihilator rows of each subspace = kernel basis of its basis matrix
  Subspace anna = rref_and_nullspace(a.basis).kernel;
  Subspace annb = rref_and_nullspace(b.basis).kernel;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < anna.dim(); ++r) rows.push_back(anna.basis.row(r));
  for (std::size_t r = 0; r < annb.dim(); ++r) rows.push_back(annb.basis.row(r));
  Matrix cond = Matrix::from_rows(f, rows);
  if (rows.empty()) cond = Matrix(f, 0, a.ambient);
  return rref_and_nullspace(cond).kernel;
}

bool subspace_member(const Subspace& a, const Vec& v) {
  if (v.size() != a.ambient) throw Error(errc::ambient_mismatch, "member");
  Vec r = v;
  // reduce against echelon rows
  for (std::size_t row = 0; row < a.dim(); ++row) {
    std::size_t pc = 0;
    while (pc < a.ambient && a.basis.at(row, pc).is_zero()) ++pc;
    if (pc == a.ambient) continue;
    if (!r[pc].is_zero()) {
      Scalar f = r[pc]; // pivot is 1
      for (std::size_t c = pc; c < a.ambient; ++c)
        if (!a.basis.at(row, c).is_zero())
          r[c] = r[c] - f * a.basis.at(row, c);
    }
  }
  return is_zero_vec(r);
}

std::optional<Vec> subspace_coords(const Subspace& a, const Vec& v) {
  if (v.size() != a.ambient) throw Error(errc::ambient_mismatch, "coords");
  const FieldPtr& f = a.basis.field();
  Vec r = v;
  Vec coords = zero_vec(f, a.dim());
  for (std::size_t row = 0; row < a.dim(); ++row) {
    std::size_t pc = 0;
    while (pc < a.ambient && a.basis.at(row, pc).is_zero()) ++pc;
    if (pc == a.ambient) continue;
    if (!r[pc].is_zero()) {
      Scalar c0 = r[pc];
      coords[row] = c0;
      for (std::size_t c = pc; c < a.ambient; ++c)
        if (!a.basis.at(row, c).is_zero())
          r[c] = r[c] - c0 * a.basis.at(row, c);
    }
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return coords;
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error(errc::ambient_mismatch, "contains");
  for (std::size_t r = 0; r < b.dim(); ++r)
    if (!subspace_member(a, b.basis.row(r))) return false;
  return true;
}

MemberOracle::MemberOracle(const Subspace& s)
    : ann_(rref_and_nullspace(s.basis).kernel.basis) {}

bool MemberOracle::contains(const Vec& v) const {
  for (std::size_t r = 0; r < ann_.rows(); ++r) {
    Scalar acc = Scalar::zero(ann_.field());
    for (std::size_t c = 0; c < ann_.cols(); ++c)
      if (!ann_.at(r, c).is_zero() && !v[c].is_zero())
        acc = acc + ann_.at(r, c) * v[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::optional<unsigned long> matrix_order(const Matrix& m, unsigned long cap) {
  if (m.rows() != m.cols()) throw Error(errc::not_invertible, "not square");
  if (rank(m) != m.rows()) throw Error(errc::not_invertible, "singular matrix");
  Matrix id = Matrix::identity(m.field(), m.rows());
  Matrix p = m;
  for (unsigned long n = 1; n <= cap; ++n) {
    if (p == id) return n;
    p = matmul(p, m);
  }
  return std::nullopt;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(errc::dim_mismatch, "solve");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = aug.at(pi, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(errc::not_invertible, "not square");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  Scalar one = Scalar::one(m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = one;
  }
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw Error(errc::not_invertible, "singular matrix");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

Vec zero_vec(const FieldPtr& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const FieldPtr& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(errc::dim_mismatch, "vec add");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(errc::dim_mismatch, "vec sub");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = c * x;
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty())
    throw Error(errc::dim_mismatch, "dot");
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s = s + a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

} // namespace hopfint
