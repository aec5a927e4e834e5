#include "toruskit/coset.hpp"

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

TorusPoint canonical_coset_translate(const ClosedSubgroup& g, const TorusPoint& y) {
  int n = g.ambient_dim();
  if (y.dim() != n) throw Error(errc::dimension_mismatch, "translate dimension mismatch");
  const auto& dual = g.dual_basis();
  int m = static_cast<int>(dual.size());
  if (m == 0) return TorusPoint::zero(n);
  RatVec t(m);
  for (int k = 0; k < m; ++k) t[k] = frac(dot(dual[k], y.coords()));
  // back-substitution on the pivot columns (upper triangular there)
  std::vector<int> pivots(m);
  for (int k = 0; k < m; ++k) pivots[k] = pivot_col(dual[k]);
  RatVec ystar(n, mpq_class(0));
  for (int k = m - 1; k >= 0; --k) {
    mpq_class rhs = t[k];
    for (int j = k + 1; j < m; ++j) rhs -= mpq_class(dual[k][pivots[j]]) * ystar[pivots[j]];
    ystar[pivots[k]] = rhs / mpq_class(dual[k][pivots[k]]);
  }
  return TorusPoint(std::move(ystar));
}

Coset::Coset(ClosedSubgroup subgroup, const TorusPoint& translate)
    : g_(std::move(subgroup)), y_(canonical_coset_translate(g_, translate)) {
  if (!g_.is_connected()) throw Error(errc::not_connected, "coset subgroup must be connected");
}

bool Coset::operator<(const Coset& o) const {
  if (g_.key() != o.g_.key()) return g_.key() < o.g_.key();
  return y_ < o.y_;
}

bool coset_in_coset(const Coset& a, const Coset& b) {
  return contains(b.subgroup(), a.subgroup()) &&
         coset_contains_point(b.subgroup(), b.translate(), a.translate());
}

CosetUnion::CosetUnion(int ambient_dim, std::vector<Coset> members) : n_(ambient_dim) {
  for (const auto& c : members)
    if (c.subgroup().ambient_dim() != n_)
      throw Error(errc::dimension_mismatch, "coset ambient dimension mismatch");
  // drop members contained in another member (set semantics, maximal members)
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (size_t i = 0; i < members.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < members.size() && maximal; ++j)
      if (i != j && coset_in_coset(members[i], members[j]) && !(members[j] == members[i]))
        maximal = false;
    if (maximal) members_.push_back(members[i]);
  }
}

std::string CosetUnion::key() const {
  std::ostringstream os;
  os << n_ << "#";
  for (const auto& c : members_) os << c.key() << "|";
  return os.str();
}

CosetUnion union_of(const CosetUnion& a, const CosetUnion& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(errc::dimension_mismatch, "union dimension mismatch");
  std::vector<Coset> all = a.members();
  all.insert(all.end(), b.members().begin(), b.members().end());
  return CosetUnion(a.ambient_dim(), std::move(all));
}

bool coset_union_contains_coset(const CosetUnion& s, const Coset& c) {
  for (const auto& m : s.members())
    if (coset_in_coset(c, m)) return true;
  return false;
}

bool coset_union_contains(const CosetUnion& a, const CosetUnion& b) {
  for (const auto& m : b.members())
    if (!coset_union_contains_coset(a, m)) return false;
  return true;
}

bool coset_union_contains_point(const CosetUnion& s, const TorusPoint& x) {
  for (const auto& m : s.members())
    if (coset_contains_point(m.subgroup(), m.translate(), x)) return true;
  return false;
}

CosetUnion invariant_subset(const CosetUnion& s, const ClosedSubgroup& g) {
  std::vector<Coset> kept;
  for (const auto& m : s.members())
    if (contains(m.subgroup(), g)) kept.push_back(m);
  return CosetUnion(s.ambient_dim(), std::move(kept));
}

}  // namespace toruskit
