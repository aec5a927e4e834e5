#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

#include "toruskit/error.hpp"

namespace toruskit {

using IntVec = std::vector<mpz_class>;
using RatVec = std::vector<mpq_class>;

/// Dense integer matrix over GMP integers, row-major. Entries are exact;
/// every operation in the exact layer preserves that.
class IntMatrix {
public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) throw Error(errc::dimension_mismatch, "matrix dimensions must be >= 1");
  }
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  mpz_class& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;
  std::vector<IntVec> row_list() const;

  IntMatrix transpose() const;

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  // row i -= q * row j
  void addmul_row(int i, int j, const mpz_class& q);
  void addmul_col(int i, int j, const mpz_class& q);

private:
  int rows_, cols_;
  std::vector<mpz_class> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);

/// Exact determinant (Bareiss fraction-free elimination).
mpz_class det(const IntMatrix& m);

mpz_class dot(const IntVec& a, const IntVec& b);
mpq_class dot(const IntVec& a, const RatVec& b);

IntMatrix power(const IntMatrix& m, unsigned j);

/// Dense rational matrix; used for exact subspace work and solving.
class RatMatrix {
public:
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 1 || cols < 1) throw Error(errc::dimension_mismatch, "matrix dimensions must be >= 1");
  }
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpq_class& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const mpq_class& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
  int rows_, cols_;
  std::vector<mpq_class> e_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVec operator*(const RatMatrix& a, const RatVec& x);

int rank(RatMatrix m);
/// Inverse of a nonsingular rational matrix; throws DEPENDENT_COLUMNS when singular.
RatMatrix inverse(const RatMatrix& m);
/// Exact integer inverse of a unimodular matrix.
IntMatrix inverse_unimodular(const IntMatrix& u);
/// Solves a.x = b exactly; throws DEPENDENT_COLUMNS when the system is singular.
RatVec solve(const RatMatrix& a, const RatVec& b);

/// Canonical representative of x in [0,1).
mpq_class frac(const mpq_class& x);

}  // namespace toruskit
