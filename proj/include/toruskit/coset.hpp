#pragma once

#include "toruskit/subgroup.hpp"

namespace toruskit {

/// Translate of a connected closed subgroup, with the translate reduced to a
/// canonical representative so cosets compare entrywise.
class Coset {
public:
  Coset(ClosedSubgroup subgroup, const TorusPoint& translate);

  const ClosedSubgroup& subgroup() const { return g_; }
  const TorusPoint& translate() const { return y_; }

  bool operator==(const Coset& o) const { return g_ == o.g_ && y_ == o.y_; }
  bool operator<(const Coset& o) const;
  std::string key() const { return g_.key() + "@" + y_.key(); }

private:
  ClosedSubgroup g_;
  TorusPoint y_;
};

/// Canonical representative of the coset G + y: the unique solution of
/// L y* = (L y mod 1) supported on the pivot columns of the dual basis L,
/// reduced to [0,1). Cosets of a closed subgroup are separated exactly by the
/// characters in G-perp, so this is a complete invariant.
TorusPoint canonical_coset_translate(const ClosedSubgroup& g, const TorusPoint& y);

/// (G1,y1) inside (G2,y2): subgroup containment plus translate membership.
bool coset_in_coset(const Coset& a, const Coset& b);

/// Element of F(T^n): finite union of translates of connected closed
/// subgroups, normalized (canonical members, no member inside another,
/// sorted). The empty union is legal and is the identity for unions.
class CosetUnion {
public:
  explicit CosetUnion(int ambient_dim) : n_(ambient_dim) {}
  CosetUnion(int ambient_dim, std::vector<Coset> members);

  int ambient_dim() const { return n_; }
  const std::vector<Coset>& members() const { return members_; }
  bool empty() const { return members_.empty(); }

  bool operator==(const CosetUnion& o) const { return n_ == o.n_ && members_ == o.members_; }
  bool operator!=(const CosetUnion& o) const { return !(*this == o); }
  std::string key() const;

private:
  int n_;
  std::vector<Coset> members_;  // normalized
};

CosetUnion union_of(const CosetUnion& a, const CosetUnion& b);

/// A connected coset lies inside a finite union iff it lies inside a single
/// member (irreducibility of connected cosets).
bool coset_union_contains_coset(const CosetUnion& s, const Coset& c);
bool coset_union_contains(const CosetUnion& a, const CosetUnion& b);  // b subset of a
bool coset_union_contains_point(const CosetUnion& s, const TorusPoint& x);

/// S_G: the union of the members whose subgroup contains G.
CosetUnion invariant_subset(const CosetUnion& s, const ClosedSubgroup& g);

}  // namespace toruskit
