#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "toruskit/int_poly.hpp"
#include "toruskit/lattice.hpp"
#include "toruskit/normal_forms.hpp"
#include "seeds.hpp"

using namespace toruskit;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, long mag) {
  std::uniform_int_distribution<long> d(-mag, mag);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IntMatrix& u) {
  mpz_class d = det(u);
  return d == 1 || d == -1;
}

IntVec vec(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("smith normal form on the documented instances") {
  {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.D == IntMatrix::identity(2));
    CHECK(s.U == IntMatrix::identity(2));
    CHECK(s.V == IntMatrix::identity(2));
  }
  {
    auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    // oracle: d1 = gcd(2,3) = 1, d2 = 6, so s = (1,6)
    CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
    CHECK(s.invariant_factors == std::vector<mpz_class>{1, 6});
    CHECK(s.elementary_divisors == std::vector<mpz_class>{1, 6});
  }
  {
    auto s = smith_normal_form(IntMatrix{{2, 4}, {4, 6}});
    // oracle: d1 = 2, d2 = |det| = 4, so s = (2, 2)
    CHECK(s.D == IntMatrix{{2, 0}, {0, 2}});
  }
}

TEST_CASE("elementary divisors on the documented instances") {
  CHECK(elementary_divisors(IntMatrix::identity(3)) == std::vector<mpz_class>{1, 1, 1});
  CHECK(elementary_divisors(IntMatrix{{2, 0}, {0, 2}}) == std::vector<mpz_class>{2, 4});
  CHECK(elementary_divisors(IntMatrix{{1}, {2}}) == std::vector<mpz_class>{1});
  CHECK(elementary_divisors_via_minors(IntMatrix{{2, 0}, {0, 2}}) == std::vector<mpz_class>{2, 4});
}

TEST_CASE("hermite normal form canonical instances") {
  {
    auto h = hermite_normal_form(IntMatrix::identity(3));
    CHECK(h.H == IntMatrix::identity(3));
    CHECK(h.rank == 3);
  }
  {
    auto h = hermite_normal_form(IntMatrix{{2, -1}, {1, 0}});
    CHECK(h.H == IntMatrix::identity(2));
    CHECK(h.U * IntMatrix{{2, -1}, {1, 0}} == h.H);
  }
  {
    auto h = hermite_normal_form(IntMatrix{{0, 2}});
    CHECK(h.H == IntMatrix{{0, 2}});
  }
}

TEST_CASE("smith/hermite randomized properties with minor-gcd oracle") {
  std::mt19937_64 rng(seeds::smith);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int iter = 0; iter < 300; ++iter) {
    IntMatrix m = random_matrix(rng, dim(rng), dim(rng), 10);
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    for (size_t k = 1; k < s.invariant_factors.size(); ++k) {
      CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);
      CHECK(s.invariant_factors[k] > 0);
    }
    CHECK(s.elementary_divisors == elementary_divisors_via_minors(m));

    auto h = hermite_normal_form(m);
    CHECK(h.U * m == h.H);
    CHECK(is_unimodular(h.U));
    // idempotence
    auto h2 = hermite_normal_form(h.H);
    CHECK(h2.H == h.H);
  }
}

TEST_CASE("hermite form is a lattice invariant") {
  std::mt19937_64 rng(seeds::lattice);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int iter = 0; iter < 200; ++iter) {
    int r = dim(rng), n = dim(rng);
    IntMatrix m = random_matrix(rng, r, n, 5);
    // left-multiply by a random unimodular matrix: same row lattice
    IntMatrix u = IntMatrix::identity(r);
    for (int k = 0; k < 6; ++k) {
      int i = std::uniform_int_distribution<int>(0, r - 1)(rng);
      int j = std::uniform_int_distribution<int>(0, r - 1)(rng);
      if (i != j) u.addmul_row(i, j, mpz_class(small(rng)));
      if (k == 3) u.swap_rows(i, j);
    }
    CHECK(is_unimodular(u));
    CHECK(hermite_normal_form(m).H == hermite_normal_form(u * m).H);
  }
}

TEST_CASE("lattice operations on the documented instances") {
  CHECK(lattice_saturate(2, {vec({0, 2})}) == std::vector<IntVec>{vec({0, 1})});
  CHECK(lattice_intersect(2, {vec({1, 0})}, {vec({0, 1})}).empty());
  CHECK(integer_kernel(IntMatrix{{1, 2}}) == std::vector<IntVec>{vec({2, -1})});
}

TEST_CASE("lattice algebra randomized properties") {
  std::mt19937_64 rng(seeds::lattice + 1);
  std::uniform_int_distribution<int> dim(1, 4);
  auto rat_rank = [](int n, const std::vector<IntVec>& rows) {
    if (rows.empty()) return 0;
    RatMatrix m(static_cast<int>(rows.size()), n);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < n; ++j) m(i, j) = mpq_class(rows[i][j]);
    return rank(m);
  };
  for (int iter = 0; iter < 200; ++iter) {
    int n = dim(rng);
    int ra = std::uniform_int_distribution<int>(0, n)(rng);
    int rb = std::uniform_int_distribution<int>(0, n)(rng);
    std::vector<IntVec> a, b;
    for (int i = 0; i < ra; ++i) a.push_back(random_matrix(rng, 1, n, 4).row(0));
    for (int i = 0; i < rb; ++i) b.push_back(random_matrix(rng, 1, n, 4).row(0));
    a = lattice_basis(n, a);
    b = lattice_basis(n, b);

    auto sat = lattice_saturate(n, a);
    CHECK(lattice_saturate(n, sat) == sat);
    CHECK(rat_rank(n, sat) == rat_rank(n, a));

    auto isect = lattice_intersect(n, a, b);
    CHECK(isect == lattice_intersect(n, b, a));
    auto sum = lattice_sum(n, a, b);
    CHECK(rat_rank(n, sum) + rat_rank(n, isect) == rat_rank(n, a) + rat_rank(n, b));
    CHECK(lattice_saturate(n, lattice_sum(n, a, isect)) == lattice_saturate(n, a));
    for (const auto& v : isect) {
      CHECK(lattice_member(a, v));
      CHECK(lattice_member(b, v));
    }
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(IntMatrix{{2, 0}, {0, 3}}) == IntPoly({6, -5, 1}));
  CHECK(char_poly(IntMatrix::identity(2)) == IntPoly({1, -2, 1}));
  CHECK(char_poly(IntMatrix{{2, 1}, {1, 3}}) == IntPoly({5, -5, 1}));
  CHECK_THROWS_AS(char_poly(IntMatrix{{1, 2}}), Error);
}

TEST_CASE("factorization of the documented instances") {
  {
    auto f = factor_over_integers(IntPoly({6, -5, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly == IntPoly({-3, 1}));
    CHECK(f.factors[1].poly == IntPoly({-2, 1}));
    CHECK(f.expand() == IntPoly({6, -5, 1}));
  }
  {
    auto f = factor_over_integers(IntPoly({5, -5, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].poly == IntPoly({5, -5, 1}));  // discriminant 5 is not a square
  }
  {
    auto f = factor_over_integers(IntPoly({2, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].poly == IntPoly({2, 0, 1}));
  }
  CHECK_THROWS_AS(factor_over_integers(IntPoly::monomial(1, 13)), Error);
}

TEST_CASE("factorization reproduces random products of small irreducibles") {
  std::vector<IntPoly> pool = {
      IntPoly({-2, 1}), IntPoly({3, 1}), IntPoly({-1, 2}), IntPoly({1, 0, 1}),
      IntPoly({2, 0, 1}), IntPoly({1, 1, 1}), IntPoly({-1, -1, 1}), IntPoly({1, 2, 2}),
      IntPoly({-2, 0, 0, 1}), IntPoly({1, 1, 0, 1}), IntPoly({-1, -1, 0, 1})};
  std::mt19937_64 rng(seeds::factor);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(2, 4);
  std::uniform_int_distribution<long> cdist(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    IntPoly p = IntPoly::constant(cdist(rng) * (iter % 2 ? 1 : -1));
    int parts = count(rng);
    int deg = 0;
    for (int i = 0; i < parts && deg <= 8; ++i) {
      const IntPoly& q = pool[pick(rng)];
      p = p * q;
      deg += q.degree();
    }
    auto f = factor_over_integers(p);
    CHECK(f.expand() == p);
    for (const auto& t : f.factors) {
      CHECK(t.poly.leading() > 0);
      CHECK(t.poly.content() == 1);
    }
  }
}

TEST_CASE("matrix polynomial evaluation") {
  IntMatrix e{{2, 0}, {0, 3}};
  IntPoly p = char_poly(e);
  IntMatrix z = eval_matrix(p, e);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(z(i, j) == 0);  // Cayley-Hamilton
}
