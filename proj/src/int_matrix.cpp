#include "toruskit/int_matrix.hpp"

namespace toruskit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init)
    : IntMatrix(static_cast<int>(init.size()),
                init.size() ? static_cast<int>(init.begin()->size()) : 0) {
  int i = 0;
  for (const auto& r : init) {
    if (static_cast<int>(r.size()) != cols_) throw Error(errc::dimension_mismatch, "ragged initializer");
    int j = 0;
    for (long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) throw Error(errc::dimension_mismatch, "from_rows: empty row list");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) throw Error(errc::dimension_mismatch, "ragged rows");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMatrix::col(int j) const {
  IntVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> rs;
  rs.reserve(rows_);
  for (int i = 0; i < rows_; ++i) rs.push_back(row(i));
  return rs;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::addmul_row(int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int k = 0; k < cols_; ++k) (*this)(i, k) -= q * (*this)(j, k);
}

void IntMatrix::addmul_col(int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int k = 0; k < rows_; ++k) (*this)(k, i) -= q * (*this)(k, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(errc::dimension_mismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  mpz_class acc;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(errc::dimension_mismatch, "matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(errc::dimension_mismatch, "matrix diff shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols() != static_cast<int>(x.size())) throw Error(errc::dimension_mismatch, "matrix-vector shape mismatch");
  IntVec y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    mpz_class acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

mpz_class det(const IntMatrix& m) {
  if (!m.square()) throw Error(errc::non_square, "determinant of non-square matrix");
  int n = m.rows();
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : mpz_class(-a(n - 1, n - 1));
}

mpz_class dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(errc::dimension_mismatch, "dot: length mismatch");
  mpz_class acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

mpq_class dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(errc::dimension_mismatch, "dot: length mismatch");
  mpq_class acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += mpq_class(a[i]) * b[i];
  return acc;
}

IntMatrix power(const IntMatrix& m, unsigned j) {
  if (!m.square()) throw Error(errc::non_square, "power of non-square matrix");
  IntMatrix acc = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (j) {
    if (j & 1u) acc = acc * base;
    j >>= 1u;
    if (j) base = base * base;
  }
  return acc;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = mpq_class(m(i, j));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(errc::dimension_mismatch, "matrix product shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      mpq_class acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

RatVec operator*(const RatMatrix& a, const RatVec& x) {
  if (a.cols() != static_cast<int>(x.size())) throw Error(errc::dimension_mismatch, "matrix-vector shape mismatch");
  RatVec y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    mpq_class acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

int rank(RatMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      mpq_class f = m(i, c) / m(r, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(errc::non_square, "inverse of non-square matrix");
  int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) throw Error(errc::dependent_columns, "singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) { std::swap(a(p, j), a(c, j)); std::swap(inv(p, j), inv(c, j)); }
    mpq_class piv = a(c, c);
    for (int j = 0; j < n; ++j) { a(c, j) /= piv; inv(c, j) /= piv; }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      mpq_class f = a(i, c);
      for (int j = 0; j < n; ++j) { a(i, j) -= f * a(c, j); inv(i, j) -= f * inv(c, j); }
    }
  }
  return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  RatMatrix inv = inverse(RatMatrix(u));
  IntMatrix r(u.rows(), u.cols());
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j) {
      const mpq_class& q = inv(i, j);
      if (q.get_den() != 1) throw Error(errc::precondition, "inverse_unimodular: matrix is not unimodular");
      r(i, j) = q.get_num();
    }
  return r;
}

RatVec solve(const RatMatrix& a, const RatVec& b) {
  if (a.rows() != static_cast<int>(b.size())) throw Error(errc::dimension_mismatch, "solve: shape mismatch");
  RatMatrix inv = inverse(a);
  return inv * b;
}

mpq_class frac(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  mpq_class r = x - mpq_class(fl);
  return r;
}

}  // namespace toruskit
