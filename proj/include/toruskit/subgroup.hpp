#pragma once

#include "toruskit/lattice.hpp"

namespace toruskit {

/// Point of T^n = R^n/Z^n with exact rational coordinates, reduced to [0,1).
class TorusPoint {
public:
  explicit TorusPoint(RatVec coords);
  static TorusPoint zero(int n) { return TorusPoint(RatVec(n, mpq_class(0))); }

  int dim() const { return static_cast<int>(c_.size()); }
  const RatVec& coords() const { return c_; }
  const mpq_class& operator[](int i) const { return c_[i]; }

  bool operator==(const TorusPoint& o) const { return c_ == o.c_; }
  bool operator!=(const TorusPoint& o) const { return c_ != o.c_; }
  bool operator<(const TorusPoint& o) const { return c_ < o.c_; }

  std::string key() const;

private:
  RatVec c_;
};

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b);
TorusPoint operator-(const TorusPoint& a, const TorusPoint& b);

/// Closed subgroup G of T^n, represented by the canonical Hermite basis of
/// its dual lattice G-perp in Z^n (the frequencies whose characters are
/// trivial on G). The representation is a bijection, so equality is
/// entrywise. An empty dual basis is the full torus.
class ClosedSubgroup {
public:
  static ClosedSubgroup from_dual(int n, const std::vector<IntVec>& generators);
  /// Closure of the image of a rational subspace, given by matrix columns.
  static ClosedSubgroup from_rational_subspace(const RatMatrix& columns);
  static ClosedSubgroup full_torus(int n);
  static ClosedSubgroup trivial(int n);

  int ambient_dim() const { return n_; }
  const std::vector<IntVec>& dual_basis() const { return dual_; }
  int dual_rank() const { return static_cast<int>(dual_.size()); }
  int dim() const { return n_ - dual_rank(); }
  bool is_connected() const { return connected_; }
  ClosedSubgroup connected_component() const;

  /// Basis rows of the lattice V ∩ Z^n, where V is the rational span lifting
  /// the identity component. Saturated by construction.
  std::vector<IntVec> lifted_lattice() const;

  bool operator==(const ClosedSubgroup& o) const { return n_ == o.n_ && dual_ == o.dual_; }
  bool operator!=(const ClosedSubgroup& o) const { return !(*this == o); }
  std::string key() const;

private:
  ClosedSubgroup(int n, std::vector<IntVec> dual_canonical);
  int n_;
  std::vector<IntVec> dual_;
  bool connected_;
};

ClosedSubgroup sum(const ClosedSubgroup& g, const ClosedSubgroup& h);
ClosedSubgroup intersect(const ClosedSubgroup& g, const ClosedSubgroup& h);
bool contains(const ClosedSubgroup& g, const ClosedSubgroup& h);

/// Connected complement H with G ∩ H = {0} and G + H = T^n, built through the
/// Smith decomposition of a generator matrix of the lift of G.
ClosedSubgroup complement(const ClosedSubgroup& g);

bool subgroup_contains_point(const ClosedSubgroup& g, const TorusPoint& x);
/// Exact test for x in G + y.
bool coset_contains_point(const ClosedSubgroup& g, const TorusPoint& y, const TorusPoint& x);

}  // namespace toruskit
