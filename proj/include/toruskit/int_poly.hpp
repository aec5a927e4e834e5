#pragma once

#include <optional>
#include <string>

#include "toruskit/int_matrix.hpp"

namespace toruskit {

/// Integer polynomial, coefficients ascending by degree, normalized so the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& v) { return IntPoly(std::vector<mpz_class>{v}); }
  static IntPoly monomial(const mpz_class& coeff, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : mpz_class(0); }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }
  // degree-then-coefficient order; used for canonical factor ordering
  bool operator<(const IntPoly& o) const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

  IntPoly derivative() const;
  mpz_class content() const;       // gcd of coefficients, nonnegative
  IntPoly primitive_part() const;  // content removed, leading coefficient > 0

private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const mpz_class& s, const IntPoly& a);
IntPoly operator-(const IntPoly& a);

/// Quotient when b divides a exactly over the integers; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Z, leading coefficient positive.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Exact characteristic polynomial det(xI - E), monic of degree n
/// (Faddeev-LeVerrier; all divisions are exact).
IntPoly char_poly(const IntMatrix& e);

/// p = constant * prod factors[i].poly ^ factors[i].multiplicity, exactly.
/// Factors are primitive, irreducible over Q, positive leading coefficient,
/// sorted canonically.
struct Factorization {
  mpz_class constant;
  struct Term {
    IntPoly poly;
    int multiplicity;
  };
  std::vector<Term> factors;

  IntPoly expand() const;
};

/// Rational-root extraction, quadratic/cubic irreducibility after root
/// stripping, Kronecker interpolation for the rest. Bounded at degree 12.
Factorization factor_over_integers(const IntPoly& p, int max_degree = 12);

/// Matrix polynomial evaluation p(E).
IntMatrix eval_matrix(const IntPoly& p, const IntMatrix& e);

std::string to_string(const IntPoly& p);

}  // namespace toruskit
