#pragma once

#include "toruskit/normal_forms.hpp"

namespace toruskit {

// Sublattices of Z^n are handled as row lists in canonical Hermite form; the
// empty list is the zero lattice. All results are canonical, so lattice
// equality is entrywise equality of the bases.

/// Canonical Hermite basis of the lattice spanned by the given rows.
std::vector<IntVec> lattice_basis(int n, const std::vector<IntVec>& rows);

std::vector<IntVec> lattice_sum(int n, const std::vector<IntVec>& a, const std::vector<IntVec>& b);
std::vector<IntVec> lattice_intersect(int n, const std::vector<IntVec>& a, const std::vector<IntVec>& b);
/// span(A) intersected with Z^n: the saturation of the lattice.
std::vector<IntVec> lattice_saturate(int n, const std::vector<IntVec>& a);
bool lattice_is_saturated(int n, const std::vector<IntVec>& a);

/// {x in Z^cols : M x = 0}, canonical basis rows.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

/// Membership of v in the lattice with canonical basis rows.
bool lattice_member(const std::vector<IntVec>& basis, const IntVec& v);
bool lattice_subset(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

/// All lattice points with sup-norm <= radius (finite; enumerated through the
/// triangular Hermite profile).
std::vector<IntVec> lattice_points_in_box(int n, const std::vector<IntVec>& basis, long radius);

/// Lattices agree inside the sup-norm box of the given radius.
bool lattices_agree_in_box(int n, const std::vector<IntVec>& a, const std::vector<IntVec>& b, long radius);

std::string lattice_key(const std::vector<IntVec>& basis);  // hashable canonical form

}  // namespace toruskit
