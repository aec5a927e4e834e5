#include "toruskit/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace toruskit {

namespace {

int pivot_col(const IntVec& row) {
  for (size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return static_cast<int>(j);
  return -1;
}

}  // namespace

std::vector<IntVec> lattice_basis(int n, const std::vector<IntVec>& rows) {
  std::vector<IntVec> nz;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw Error(errc::dimension_mismatch, "lattice row length != n");
    if (pivot_col(r) >= 0) nz.push_back(r);
  }
  if (nz.empty()) return {};
  auto h = hermite_normal_form(IntMatrix::from_rows(nz));
  std::vector<IntVec> out;
  for (int i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
  return out;
}

std::vector<IntVec> lattice_sum(int n, const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  std::vector<IntVec> rows = a;
  rows.insert(rows.end(), b.begin(), b.end());
  return lattice_basis(n, rows);
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
  auto h = hermite_normal_form(m.transpose());
  std::vector<IntVec> out;
  for (int i = h.rank; i < h.U.rows(); ++i) out.push_back(h.U.row(i));
  return lattice_basis(m.cols(), out);
}

std::vector<IntVec> lattice_intersect(int n, const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  if (a.empty() || b.empty()) return {};
  int ra = static_cast<int>(a.size()), rb = static_cast<int>(b.size());
  // (u,v) with u*A = v*B ranges over the kernel of [A^T | -B^T]
  IntMatrix m(n, ra + rb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < n; ++j) m(j, i) = a[i][j];
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < n; ++j) m(j, ra + i) = -b[i][j];
  auto ker = integer_kernel(m);
  std::vector<IntVec> rows;
  for (const auto& uv : ker) {
    IntVec x(n, mpz_class(0));
    for (int i = 0; i < ra; ++i)
      for (int j = 0; j < n; ++j) x[j] += uv[i] * a[i][j];
    rows.push_back(std::move(x));
  }
  return lattice_basis(n, rows);
}

std::vector<IntVec> lattice_saturate(int n, const std::vector<IntVec>& a) {
  auto basis = lattice_basis(n, a);
  if (basis.empty()) return {};
  auto ker = integer_kernel(IntMatrix::from_rows(basis));
  if (ker.empty()) {
    // full rational span: saturation is Z^n
    return IntMatrix::identity(n).row_list();
  }
  return integer_kernel(IntMatrix::from_rows(ker));
}

bool lattice_is_saturated(int n, const std::vector<IntVec>& a) {
  return lattice_basis(n, a) == lattice_saturate(n, a);
}

bool lattice_member(const std::vector<IntVec>& basis, const IntVec& v) {
  IntVec r = v;
  for (const auto& row : basis) {
    int p = pivot_col(row);
    if (r[p] == 0) continue;
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[p].get_mpz_t(), row[p].get_mpz_t());
    if (rem != 0) return false;
    for (size_t j = 0; j < r.size(); ++j) r[j] -= q * row[j];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool lattice_subset(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  for (const auto& row : a)
    if (!lattice_member(b, row)) return false;
  return true;
}

namespace {

void enumerate_rec(const std::vector<IntVec>& basis, const std::vector<int>& pivots, long radius,
                   size_t k, IntVec& partial, std::vector<IntVec>& out) {
  if (k == basis.size()) {
    for (const auto& x : partial)
      if (abs(x) > radius) return;
    out.push_back(partial);
    return;
  }
  const IntVec& row = basis[k];
  const mpz_class& piv = row[pivots[k]];
  mpz_class lo, hi;
  mpz_class a = -radius - partial[pivots[k]];
  mpz_class b = radius - partial[pivots[k]];
  mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), piv.get_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), piv.get_mpz_t());
  for (mpz_class c = lo; c <= hi; ++c) {
    if (c != 0)
      for (size_t j = 0; j < partial.size(); ++j) partial[j] += c * row[j];
    enumerate_rec(basis, pivots, radius, k + 1, partial, out);
    if (c != 0)
      for (size_t j = 0; j < partial.size(); ++j) partial[j] -= c * row[j];
  }
}

}  // namespace

std::vector<IntVec> lattice_points_in_box(int n, const std::vector<IntVec>& basis, long radius) {
  std::vector<int> pivots;
  for (const auto& r : basis) pivots.push_back(pivot_col(r));
  IntVec partial(n, mpz_class(0));
  std::vector<IntVec> out;
  enumerate_rec(basis, pivots, radius, 0, partial, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool lattices_agree_in_box(int n, const std::vector<IntVec>& a, const std::vector<IntVec>& b, long radius) {
  for (const auto& p : lattice_points_in_box(n, a, radius))
    if (!lattice_member(b, p)) return false;
  for (const auto& p : lattice_points_in_box(n, b, radius))
    if (!lattice_member(a, p)) return false;
  return true;
}

std::string lattice_key(const std::vector<IntVec>& basis) {
  std::ostringstream os;
  for (const auto& r : basis) {
    for (const auto& x : r) os << x.get_str() << ",";
    os << ";";
  }
  return os.str();
}

}  // namespace toruskit
