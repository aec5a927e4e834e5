#pragma once

#include "toruskit/coset.hpp"

namespace toruskit {

/// Finite trigonometric sum h(x) = sum_t (re_t + i im_t) exp(2 pi i (freq_t . x + phase_t))
/// with exact rational re/im and phase (in turns). The phase field carries
/// root-of-unity coefficients that are not complex rationals; quarter-turn
/// phases are folded into re/im so the plain rational form is canonical
/// whenever it exists.
class TrigPoly {
public:
  struct Term {
    IntVec freq;
    mpq_class re, im;
    mpq_class phase;  // in [0,1); 0 after folding when a quarter turn
  };

  TrigPoly(int ambient_dim, std::vector<Term> terms);
  explicit TrigPoly(int ambient_dim) : n_(ambient_dim) {}

  int ambient_dim() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// c_{-l} = conj(c_l) for every term.
  bool is_real_valued() const;

  /// Value at a rational point, computed at the given precision (bits).
  /// The frequency-phase argument is reduced exactly mod 1 first, so there is
  /// no large-argument loss in cos/sin. Imag part vanishes for real-valued h.
  double eval_real(const RatVec& x, int precision_bits = 64) const;

  bool operator==(const TrigPoly& o) const;

private:
  int n_;
  std::vector<Term> terms_;  // sorted by frequency, frequencies unique
};

/// h(x) = sum_j |chi_j(x) - chi_j(y)|^2 over the dual basis of G: real
/// analytic, nonnegative, vanishing exactly on G + y. The full torus gives
/// the empty sum h == 0.
TrigPoly coset_to_trig_poly(const ClosedSubgroup& g, const TorusPoint& y);

}  // namespace toruskit
