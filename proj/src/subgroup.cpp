#include "toruskit/subgroup.hpp"

#include <sstream>

namespace toruskit {

TorusPoint::TorusPoint(RatVec coords) : c_(std::move(coords)) {
  for (auto& x : c_) x = frac(x);
}

std::string TorusPoint::key() const {
  std::ostringstream os;
  for (const auto& x : c_) os << x.get_num().get_str() << "/" << x.get_den().get_str() << ",";
  return os.str();
}

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim()) throw Error(errc::dimension_mismatch, "point sum dimension mismatch");
  RatVec c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return TorusPoint(std::move(c));
}

TorusPoint operator-(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim()) throw Error(errc::dimension_mismatch, "point diff dimension mismatch");
  RatVec c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
  return TorusPoint(std::move(c));
}

ClosedSubgroup::ClosedSubgroup(int n, std::vector<IntVec> dual_canonical)
    : n_(n), dual_(std::move(dual_canonical)) {
  connected_ = lattice_is_saturated(n_, dual_);
}

ClosedSubgroup ClosedSubgroup::from_dual(int n, const std::vector<IntVec>& generators) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != n)
      throw Error(errc::dimension_mismatch, "dual generator length != ambient dimension");
  return ClosedSubgroup(n, lattice_basis(n, generators));
}

ClosedSubgroup ClosedSubgroup::from_rational_subspace(const RatMatrix& columns) {
  int n = columns.rows(), m = columns.cols();
  if (rank(columns) != m) throw Error(errc::dependent_columns, "subspace basis has dependent columns");
  // clear denominators columnwise; the dual is the integer kernel of the rows
  std::vector<IntVec> gen_rows;
  for (int j = 0; j < m; ++j) {
    mpz_class lcm = 1;
    for (int i = 0; i < n; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), columns(i, j).get_den().get_mpz_t());
    IntVec row(n);
    for (int i = 0; i < n; ++i) {
      mpq_class v = columns(i, j) * mpq_class(lcm);
      row[i] = v.get_num();
    }
    gen_rows.push_back(std::move(row));
  }
  if (gen_rows.empty()) return trivial(n);
  return ClosedSubgroup(n, integer_kernel(IntMatrix::from_rows(gen_rows)));
}

ClosedSubgroup ClosedSubgroup::full_torus(int n) { return ClosedSubgroup(n, {}); }

ClosedSubgroup ClosedSubgroup::trivial(int n) {
  return ClosedSubgroup(n, IntMatrix::identity(n).row_list());
}

ClosedSubgroup ClosedSubgroup::connected_component() const {
  return ClosedSubgroup(n_, lattice_saturate(n_, dual_));
}

std::vector<IntVec> ClosedSubgroup::lifted_lattice() const {
  if (dual_.empty()) return IntMatrix::identity(n_).row_list();
  return integer_kernel(IntMatrix::from_rows(dual_));
}

std::string ClosedSubgroup::key() const {
  std::ostringstream os;
  os << n_ << "|" << lattice_key(dual_);
  return os.str();
}

ClosedSubgroup sum(const ClosedSubgroup& g, const ClosedSubgroup& h) {
  if (g.ambient_dim() != h.ambient_dim()) throw Error(errc::dimension_mismatch, "subgroup sum dimension mismatch");
  return ClosedSubgroup::from_dual(g.ambient_dim(),
                                   lattice_intersect(g.ambient_dim(), g.dual_basis(), h.dual_basis()));
}

ClosedSubgroup intersect(const ClosedSubgroup& g, const ClosedSubgroup& h) {
  if (g.ambient_dim() != h.ambient_dim()) throw Error(errc::dimension_mismatch, "subgroup intersect dimension mismatch");
  return ClosedSubgroup::from_dual(g.ambient_dim(),
                                   lattice_sum(g.ambient_dim(), g.dual_basis(), h.dual_basis()));
}

bool contains(const ClosedSubgroup& g, const ClosedSubgroup& h) {
  if (g.ambient_dim() != h.ambient_dim()) throw Error(errc::dimension_mismatch, "subgroup contains dimension mismatch");
  return lattice_subset(g.dual_basis(), h.dual_basis());
}

ClosedSubgroup complement(const ClosedSubgroup& g) {
  if (!g.is_connected()) throw Error(errc::not_connected, "complement requires a connected subgroup");
  int n = g.ambient_dim();
  auto lift = g.lifted_lattice();
  int m = static_cast<int>(lift.size());
  if (m == 0) return ClosedSubgroup::full_torus(n);
  if (m == n) return ClosedSubgroup::trivial(n);
  // columns of M span the lift; H is the image of the span of the last n-m
  // columns of U^{-1} from U*M*V = D
  IntMatrix cols(n, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) cols(i, j) = lift[j][i];
  auto s = smith_normal_form(cols);
  IntMatrix uinv = inverse_unimodular(s.U);
  RatMatrix w(n, n - m);
  for (int j = 0; j < n - m; ++j)
    for (int i = 0; i < n; ++i) w(i, j) = mpq_class(uinv(i, m + j));
  return ClosedSubgroup::from_rational_subspace(w);
}

bool subgroup_contains_point(const ClosedSubgroup& g, const TorusPoint& x) {
  return coset_contains_point(g, TorusPoint::zero(g.ambient_dim()), x);
}

bool coset_contains_point(const ClosedSubgroup& g, const TorusPoint& y, const TorusPoint& x) {
  if (x.dim() != g.ambient_dim() || y.dim() != g.ambient_dim())
    throw Error(errc::dimension_mismatch, "point dimension mismatch");
  for (const auto& ell : g.dual_basis()) {
    mpq_class v = 0;
    for (int i = 0; i < g.ambient_dim(); ++i) v += mpq_class(ell[i]) * (x[i] - y[i]);
    if (v.get_den() != 1) return false;
  }
  return true;
}

}  // namespace toruskit
