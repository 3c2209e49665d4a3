#include "skernel/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "skernel/error.hpp"

namespace skernel {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw StructuralError("matrix entry count " + std::to_string(entries_.size()) +
                          " does not match shape " + std::to_string(rows_) + "x" +
                          std::to_string(cols_));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Integer> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw StructuralError("ragged matrix literal");
    for (long long v : row) e.emplace_back(v);
  }
  return IntMatrix(r, c, std::move(e));
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw StructuralError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

void IntMatrix::add_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b(r, c) != 0) (*this)(r0 + r, c0 + c) += b(r, c);
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw StructuralError("matrix-vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw StructuralError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                          std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                          std::to_string(b.cols_));
  }
  IntMatrix out(a.rows_, b.cols_);
  // Face and degeneracy matrices are mostly zero; skip zero factors.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw StructuralError("matrix difference shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& e : out.entries_) e = -e;
  return out;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& e : out.entries_) e *= s;
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw StructuralError("hstack row mismatch");
  IntMatrix out(a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw StructuralError("vstack column mismatch");
  IntMatrix out(a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Integer& x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (b(k, l) != 0) out(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

namespace {

// Working copy for elimination: rows as vectors so that swaps are cheap.
using Rows = std::vector<IntVector>;

Rows to_rows(const IntMatrix& m) {
  Rows r(m.rows(), IntVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

IntMatrix from_rows_vec(const Rows& r, std::size_t cols) {
  IntMatrix m(r.size(), cols);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[i][j];
  return m;
}

// row_i -= q * row_k
void row_axpy(IntVector& target, const IntVector& source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j)
    if (source[j] != 0) target[j] -= q * source[j];
}

// Row-style Hermite normal form in place; returns the number of nonzero rows,
// which are moved to the top.
std::size_t hermite_rows(Rows& a, std::size_t ncols) {
  std::size_t r = 0;
  const std::size_t nrows = a.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    while (true) {
      std::size_t best = nrows;
      for (std::size_t i = r; i < nrows; ++i) {
        if (a[i][c] == 0) continue;
        if (best == nrows || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == nrows) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < nrows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q = a[i][c] / a[r][c];
        row_axpy(a[i], a[r], q);
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= nrows || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      row_axpy(a[i], a[r], floor_div(a[i][c], a[r][c]));
    }
    ++r;
  }
  return r;
}

struct Eliminator {
  Rows d;            // working matrix, rows
  Rows u;            // accumulated row transform (may be empty when untracked)
  Rows vt;           // accumulated column transform, stored transposed (may be empty)
  std::size_t m, n;
  bool track;

  void swap_rows(std::size_t i, std::size_t k) {
    std::swap(d[i], d[k]);
    if (track) std::swap(u[i], u[k]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    for (auto& row : d) std::swap(row[j], row[k]);
    if (track) std::swap(vt[j], vt[k]);
  }
  // row_i -= q row_k
  void row_op(std::size_t i, std::size_t k, const Integer& q) {
    row_axpy(d[i], d[k], q);
    if (track) row_axpy(u[i], u[k], q);
  }
  // col_j -= q col_k
  void col_op(std::size_t j, std::size_t k, const Integer& q) {
    if (q == 0) return;
    for (auto& row : d)
      if (row[k] != 0) row[j] -= q * row[k];
    if (track) row_axpy(vt[j], vt[k], q);
  }
  void negate_row(std::size_t i) {
    for (auto& x : d[i]) x = -x;
    if (track)
      for (auto& x : u[i]) x = -x;
  }

  void run() {
    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
      if (!move_min_to_pivot(t, true)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d[i][t] == 0) continue;
          row_op(i, t, d[i][t] / d[t][t]);
          if (d[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d[t][j] == 0) continue;
          col_op(j, t, d[t][j] / d[t][t]);
          if (d[t][j] != 0) dirty = true;
        }
        if (dirty) {
          move_min_to_pivot(t, false);
          continue;
        }
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (d[i][j] % d[t][t] != 0) {
              row_op(t, i, Integer(-1));
              fixed = true;
              break;
            }
        if (!fixed) break;
      }
      if (d[t][t] < 0) negate_row(t);
    }
  }

  // Moves the smallest nonzero entry of the trailing block (or of row/column t
  // only) to position (t,t). Returns false when the searched region is zero.
  bool move_min_to_pivot(std::size_t t, bool whole_block) {
    std::size_t bi = m, bj = n;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (d[i][j] == 0) return;
      if (bi == m || abs(d[i][j]) < abs(d[bi][bj])) {
        bi = i;
        bj = j;
      }
    };
    if (whole_block) {
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < m; ++i) consider(i, t);
      for (std::size_t j = t; j < n; ++j) consider(t, j);
    }
    if (bi == m) return false;
    if (bi != t) swap_rows(t, bi);
    if (bj != t) swap_cols(t, bj);
    return true;
  }
};

Rows identity_rows(std::size_t n) {
  Rows r(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& mat) {
  Eliminator e{to_rows(mat), identity_rows(mat.rows()), identity_rows(mat.cols()), mat.rows(),
               mat.cols(), true};
  e.run();
  SmithForm out;
  out.D = from_rows_vec(e.d, mat.cols());
  out.U = from_rows_vec(e.u, mat.rows());
  out.V = from_rows_vec(e.vt, mat.cols()).transpose();
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& mat) {
  Eliminator e{to_rows(mat), {}, {}, mat.rows(), mat.cols(), false};
  e.run();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(mat.rows(), mat.cols()); ++t) {
    if (e.d[t][t] == 0) break;
    out.push_back(e.d[t][t]);
  }
  return out;
}

std::size_t rank(const IntMatrix& m) {
  Rows a = to_rows(m);
  return hermite_rows(a, m.cols());
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  Rows a = to_rows(generators.transpose());
  const std::size_t r = hermite_rows(a, generators.rows());
  a.resize(r);
  return from_rows_vec(a, generators.rows()).transpose();
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // Hermite form of [Mᵀ | I]: rows whose Mᵀ part vanishes carry a kernel basis.
  const std::size_t n = m.cols();
  const std::size_t rows = m.rows();
  Rows a(n, IntVector(rows + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < rows; ++j) a[i][j] = m(j, i);
    a[i][rows + i] = 1;
  }
  hermite_rows(a, rows + n);
  std::vector<IntVector> cols;
  for (const auto& row : a) {
    bool zero_left = true;
    for (std::size_t j = 0; j < rows; ++j)
      if (row[j] != 0) {
        zero_left = false;
        break;
      }
    if (!zero_left) continue;
    cols.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(rows), row.end());
  }
  return IntMatrix::from_columns(n, cols);
}

std::optional<IntMatrix> solve_in_lattice(const IntMatrix& basis, const IntMatrix& targets) {
  if (basis.rows() != targets.rows()) throw StructuralError("solve_in_lattice: row mismatch");
  const std::size_t k = basis.cols();
  const SmithForm s = smith_normal_form(basis);
  for (std::size_t i = 0; i < k; ++i)
    if (s.D(i, i) == 0) throw StructuralError("solve_in_lattice: basis is rank deficient");
  const IntMatrix y = s.U * targets;
  IntMatrix x(k, targets.cols());
  for (std::size_t c = 0; c < targets.cols(); ++c) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (i < k) {
        if (y(i, c) % s.D(i, i) != 0) return std::nullopt;
        x(i, c) = y(i, c) / s.D(i, i);
      } else if (y(i, c) != 0) {
        return std::nullopt;
      }
    }
  }
  return s.V * x;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rows a = to_rows(m);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) return std::nullopt;
  return solve_in_lattice(m, IntMatrix::identity(m.rows()));
}

}  // namespace skernel
