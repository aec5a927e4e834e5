#include "toruskit/normal_forms.hpp"

#include <algorithm>

namespace toruskit {

namespace {

// Position of a nonzero entry of minimal absolute value in the trailing
// submatrix a[t.., t..], or (-1,-1) when that submatrix is zero.
std::pair<int, int> min_nonzero(const IntMatrix& a, int t) {
  std::pair<int, int> best{-1, -1};
  mpz_class best_abs;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      mpz_class v = abs(a(i, j));
      if (best.first < 0 || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  int n = m.rows(), c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(c);
  int lim = std::min(n, c);

  for (int t = 0; t < lim; ++t) {
    auto pos = min_nonzero(a, t);
    if (pos.first < 0) break;  // trailing submatrix zero: rank reached
    a.swap_rows(t, pos.first);
    u.swap_rows(t, pos.first);
    a.swap_cols(t, pos.second);
    v.swap_cols(t, pos.second);

    for (;;) {
      bool dirty = false;
      // clear column t below the pivot
      for (int i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.addmul_row(i, t, q);
        u.addmul_row(i, t, q);
        if (a(i, t) != 0) {
          // remainder is strictly smaller: promote it to the pivot
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          dirty = true;
        }
      }
      // clear row t right of the pivot
      for (int j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.addmul_col(j, t, q);
        v.addmul_col(j, t, q);
        if (a(t, j) != 0) {
          a.swap_cols(t, j);
          v.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide the whole trailing block for the divisibility chain
      bool divides_all = true;
      for (int i = t + 1; i < n && divides_all; ++i)
        for (int j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.addmul_row(t, i, mpz_class(-1));  // fold row i into the pivot row
            u.addmul_row(t, i, mpz_class(-1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }

    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{u, v, a, {}, {}};
  mpz_class prod = 1;
  for (int t = 0; t < lim; ++t) {
    if (a(t, t) == 0) break;
    out.invariant_factors.push_back(a(t, t));
    prod *= a(t, t);
    out.elementary_divisors.push_back(prod);
  }
  return out;
}

std::vector<mpz_class> elementary_divisors(const IntMatrix& m) {
  return smith_normal_form(m).elementary_divisors;
}

std::vector<mpz_class> elementary_divisors_via_minors(const IntMatrix& m) {
  int n = m.rows(), c = m.cols();
  int lim = std::min(n, c);
  std::vector<mpz_class> out;
  for (int k = 1; k <= lim; ++k) {
    mpz_class g = 0;
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = i;
    for (;;) {  // all k-subsets of rows
      for (int i = 0; i < k; ++i) ci[i] = i;
      for (;;) {  // all k-subsets of cols
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
        mpz_class d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        int p = k - 1;
        while (p >= 0 && ci[p] == c - k + p) --p;
        if (p < 0) break;
        ++ci[p];
        for (int q = p + 1; q < k; ++q) ci[q] = ci[q - 1] + 1;
      }
      int p = k - 1;
      while (p >= 0 && ri[p] == n - k + p) --p;
      if (p < 0) break;
      ++ri[p];
      for (int q = p + 1; q < k; ++q) ri[q] = ri[q - 1] + 1;
    }
    if (g == 0) break;  // all k-minors vanish; rank is k-1
    out.push_back(g);
  }
  return out;
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
  int n = m.rows(), c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  int r = 0;
  for (int col = 0; col < c && r < n; ++col) {
    // gcd-reduce entries of this column below row r until one remains
    for (;;) {
      int p = -1;
      mpz_class best;
      for (int i = r; i < n; ++i) {
        if (a(i, col) == 0) continue;
        mpz_class v = abs(a(i, col));
        if (p < 0 || v < best) {
          p = i;
          best = v;
        }
      }
      if (p < 0) break;
      a.swap_rows(r, p);
      u.swap_rows(r, p);
      bool clean = true;
      for (int i = r + 1; i < n; ++i) {
        if (a(i, col) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
        a.addmul_row(i, r, q);
        u.addmul_row(i, r, q);
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) {
      a.negate_row(r);
      u.negate_row(r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
      a.addmul_row(i, r, q);
      u.addmul_row(i, r, q);
    }
    ++r;
  }
  return HermiteResult{a, u, r};
}

}  // namespace toruskit
