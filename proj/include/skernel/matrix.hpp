#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skernel {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major. A 0×n or n×0 matrix is valid and is the
/// carrier for maps into or out of the zero group.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Integer> entries() const { return entries_; }
  std::span<const Integer> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  IntVector column(std::size_t c) const;

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
  void add_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  IntVector operator*(const IntVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// D = U·M·V with U, V unimodular and D diagonal, d₁ | d₂ | … ≥ 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal of the Smith form, in divisibility order. Cheaper than
/// smith_normal_form since no transforms are tracked.
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Canonical basis (columns, Hermite form) of the lattice spanned by the columns of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Basis (columns) of the integer kernel {x : M x = 0}. The kernel lattice is saturated,
/// so the basis extends to a basis of Zⁿ.
IntMatrix kernel_basis(const IntMatrix& m);

/// Solves basis · X = targets over the integers; basis must have full column rank.
/// Returns nullopt when some target is not in the lattice spanned by basis.
std::optional<IntMatrix> solve_in_lattice(const IntMatrix& basis, const IntMatrix& targets);

Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Floor division for b > 0.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace skernel
