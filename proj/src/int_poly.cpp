#include "toruskit/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace toruskit {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::monomial(const mpz_class& coeff, int deg) {
  std::vector<mpz_class> c(deg + 1);
  c[deg] = coeff;
  return IntPoly(std::move(c));
}

bool IntPoly::operator<(const IntPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int k = degree(); k >= 0; --k)
    if (coeff(k) != o.coeff(k)) return coeff(k) < o.coeff(k);
  return false;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * x + mpq_class(c_[k]);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<mpz_class> d(degree());
  for (int k = 1; k <= degree(); ++k) d[k - 1] = k * c_[k];
  return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(d[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  std::vector<mpz_class> c(a.coeffs());
  for (auto& v : c) v *= s;
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) { return mpz_class(-1) * a; }

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> quo(a.degree() - b.degree() + 1);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    mpz_class top = rem[k + b.degree()];
    if (top == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    if (r != 0) return std::nullopt;
    quo[k] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

namespace {

// pseudo-remainder: lc(b)^(da-db+1) * a = q*b + r
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    IntPoly t = a.leading() * IntPoly::monomial(1, shift) * b;
    a = b.leading() * a - t;
  }
  return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly f = a.primitive_part(), g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPoly r = pseudo_rem(f, g).primitive_part();
    f = g;
    g = r;
  }
  return cont * f.primitive_part();
}

IntPoly char_poly(const IntMatrix& e) {
  if (!e.square()) throw Error(errc::non_square, "char_poly requires a square matrix");
  int n = e.rows();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix a = e * m;
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += a(i, i);
    mpz_class ck;
    mpz_class negtr = -tr;
    mpz_class kk = k;
    mpz_divexact(ck.get_mpz_t(), negtr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = ck;
    if (k < n) {
      for (int i = 0; i < n; ++i) a(i, i) += ck;
      m = a;
    }
  }
  return IntPoly(std::move(c));
}

IntPoly Factorization::expand() const {
  IntPoly p = IntPoly::constant(constant);
  for (const auto& t : factors)
    for (int i = 0; i < t.multiplicity; ++i) p = p * t.poly;
  return p;
}

namespace {

// signed divisors of v with |d| <= bound
std::vector<mpz_class> bounded_divisors(const mpz_class& v, const mpz_class& bound) {
  std::vector<mpz_class> out;
  mpz_class a = abs(v);
  for (unsigned long d = 1; mpz_class(d) * d <= a; ++d) {
    if (!mpz_divisible_ui_p(a.get_mpz_t(), d)) continue;
    mpz_class e = a / d;
    if (d <= bound) out.push_back(d);
    if (e != d && e <= bound) out.push_back(e);
  }
  std::vector<mpz_class> all;
  all.reserve(out.size() * 2);
  for (const auto& d : out) {
    all.push_back(d);
    all.push_back(-d);
  }
  std::sort(all.begin(), all.end());
  return all;
}

// rational roots p/q of f (coprime, q > 0); each gives a factor q*x - p
std::vector<std::pair<mpz_class, mpz_class>> rational_roots(const IntPoly& f) {
  std::vector<std::pair<mpz_class, mpz_class>> roots;
  if (f.degree() < 1 || f.coeff(0) == 0) return roots;
  mpz_class big = abs(f.coeff(0)) + 1;
  auto nums = bounded_divisors(f.coeff(0), big);
  mpz_class bigl = abs(f.leading()) + 1;
  auto dens = bounded_divisors(f.leading(), bigl);
  for (const auto& q : dens) {
    if (q <= 0) continue;
    for (const auto& p : nums) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      if (f.eval(mpq_class(p, q)) == 0) roots.emplace_back(p, q);
    }
  }
  return roots;
}

// Landau-Mignotte: any integer factor g of f satisfies ||g||_1 <= 2^deg(g) * ||f||_2
mpz_class factor_value_bound(const IntPoly& f, int d, const mpz_class& x) {
  mpz_class norm2sq = 0;
  for (const auto& c : f.coeffs()) norm2sq += c * c;
  mpz_class norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2sq.get_mpz_t());
  norm2 += 1;  // ceil
  mpz_class b = (mpz_class(1) << d) * norm2;
  mpz_class xa = std::max(mpz_class(abs(x)), mpz_class(1));
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), xa.get_mpz_t(), d);
  return b * pw;
}

// Lagrange interpolation; nullopt when the result is not an integer
// polynomial of degree exactly d with positive leading coefficient.
std::optional<IntPoly> interpolate_integer(const std::vector<mpz_class>& xs,
                                           const std::vector<mpz_class>& ys, int d) {
  int m = static_cast<int>(xs.size());
  std::vector<mpq_class> acc(m, mpq_class(0));
  for (int i = 0; i < m; ++i) {
    // basis polynomial for node i, times ys[i]
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom = 1;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      basis.resize(basis.size() + 1, mpq_class(0));
      for (int k = static_cast<int>(basis.size()) - 1; k >= 1; --k)
        basis[k] = basis[k - 1] - mpq_class(xs[j]) * basis[k];
      basis[0] = -mpq_class(xs[j]) * basis[0];
      denom *= mpq_class(xs[i]) - mpq_class(xs[j]);
    }
    mpq_class w = mpq_class(ys[i]) / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += w * basis[k];
  }
  std::vector<mpz_class> c(m);
  for (int k = 0; k < m; ++k) {
    if (acc[k].get_den() != 1) return std::nullopt;
    c[k] = acc[k].get_num();
  }
  IntPoly g(std::move(c));
  if (g.degree() != d || g.leading() <= 0) return std::nullopt;
  return g;
}

// Kronecker search for an irreducible factor of degree <= max_d of the
// squarefree, root-free, primitive f. Returns the lowest-degree factor found.
std::optional<IntPoly> kronecker_find_factor(const IntPoly& f, int max_d) {
  static const long kPoints[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6};
  for (int d = 2; d <= max_d; ++d) {
    int npts = d + 1;
    std::vector<mpz_class> xs(npts);
    std::vector<std::vector<mpz_class>> cands(npts);
    for (int i = 0; i < npts; ++i) {
      xs[i] = kPoints[i];
      cands[i] = bounded_divisors(f.eval(xs[i]), factor_value_bound(f, d, xs[i]));
    }
    // visit points with the fewest candidates first
    std::vector<int> order(npts);
    for (int i = 0; i < npts; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cands[a].size() < cands[b].size(); });
    std::vector<mpz_class> oxs(npts);
    std::vector<std::vector<mpz_class>> ocands(npts);
    for (int i = 0; i < npts; ++i) {
      oxs[i] = xs[order[i]];
      ocands[i] = std::move(cands[order[i]]);
    }

    std::vector<size_t> idx(npts, 0);
    std::vector<mpz_class> pick(npts);
    int pos = 0;
    while (pos >= 0) {
      if (pos == npts) {
        auto g = interpolate_integer(oxs, pick, d);
        if (g && g->content() == 1 && exact_divide(f, *g)) return g;
        --pos;
        ++idx[pos];
        continue;
      }
      if (idx[pos] >= ocands[pos].size()) {
        idx[pos] = 0;
        --pos;
        if (pos >= 0) ++idx[pos];
        continue;
      }
      pick[pos] = ocands[pos][idx[pos]];
      // integer polynomials satisfy (x-y) | (g(x)-g(y))
      bool ok = true;
      for (int q = 0; q < pos; ++q) {
        mpz_class dx = oxs[q] - oxs[pos];
        if ((pick[q] - pick[pos]) % dx != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        ++idx[pos];
        continue;
      }
      ++pos;
    }
  }
  return std::nullopt;
}

// f primitive, squarefree, positive leading, nonzero constant coefficient
void factor_squarefree(IntPoly f, std::vector<IntPoly>& out) {
  for (;;) {
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
      out.push_back(f);
      return;
    }
    auto roots = rational_roots(f);
    if (!roots.empty()) {
      const auto& [p, q] = roots.front();
      IntPoly lin(std::vector<mpz_class>{-p, q});
      out.push_back(lin);
      auto quo = exact_divide(f, lin);
      f = quo->primitive_part();
      continue;
    }
    // no rational roots: degree 2 and 3 are irreducible (for quadratics this
    // is the discriminant-not-a-square test in disguise)
    if (f.degree() <= 3) {
      out.push_back(f);
      return;
    }
    auto g = kronecker_find_factor(f, f.degree() / 2);
    if (!g) {
      out.push_back(f);
      return;
    }
    // a minimal-degree factor is irreducible: anything smaller would have
    // been found at a lower d or as a rational root
    out.push_back(*g);
    f = exact_divide(f, *g)->primitive_part();
  }
}

}  // namespace

Factorization factor_over_integers(const IntPoly& p, int max_degree) {
  if (p.is_zero()) return Factorization{0, {}};
  if (p.degree() > max_degree)
    throw Error(errc::degree_bound, "factorization bounded at degree " + std::to_string(max_degree));
  Factorization out;
  out.constant = p.content();
  if (p.leading() < 0) out.constant = -out.constant;
  IntPoly f = p.primitive_part();

  std::vector<std::pair<IntPoly, int>> terms;
  // monomial part
  int k = 0;
  while (f.degree() >= 1 && f.coeff(0) == 0) {
    f = *exact_divide(f, IntPoly({0, 1}));
    ++k;
  }
  if (k > 0) terms.emplace_back(IntPoly({0, 1}), k);

  // Yun squarefree decomposition, then full factorization per part
  if (f.degree() >= 1) {
    IntPoly d = f.derivative();
    IntPoly g = poly_gcd(f, d);
    IntPoly w = *exact_divide(f, g);
    IntPoly y = *exact_divide(d, g);
    int mult = 1;
    while (w.degree() >= 1) {
      IntPoly z = y - w.derivative();
      IntPoly a = poly_gcd(w, z);
      if (a.degree() >= 1) {
        std::vector<IntPoly> irr;
        factor_squarefree(a.primitive_part(), irr);
        for (auto& q : irr) terms.emplace_back(std::move(q), mult);
      }
      w = *exact_divide(w, a);
      y = *exact_divide(z, a);
      ++mult;
    }
  }

  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [poly, mult] : terms) out.factors.push_back({std::move(poly), mult});
  return out;
}

IntMatrix eval_matrix(const IntPoly& p, const IntMatrix& e) {
  if (!e.square()) throw Error(errc::non_square, "matrix polynomial needs a square matrix");
  int n = e.rows();
  IntMatrix acc(n, n);
  if (p.is_zero()) return acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * e;
    for (int i = 0; i < n; ++i) acc(i, i) += p.coeff(k);
  }
  return acc;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coeff(k) == 0) continue;
    mpz_class c = p.coeff(k);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace toruskit
