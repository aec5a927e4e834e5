#include "toruskit/trig_poly.hpp"

#include <mpfr.h>

#include <algorithm>

namespace toruskit {

namespace {

// multiply (re, im) by i^k to fold a quarter-turn phase
void fold_quarter(mpq_class& re, mpq_class& im, long k) {
  for (long t = 0; t < ((k % 4) + 4) % 4; ++t) {
    mpq_class nre = -im, nim = re;
    re = nre;
    im = nim;
  }
}

}  // namespace

TrigPoly::TrigPoly(int ambient_dim, std::vector<Term> terms) : n_(ambient_dim) {
  for (auto& t : terms) {
    if (static_cast<int>(t.freq.size()) != n_)
      throw Error(errc::dimension_mismatch, "trig term frequency length != ambient dimension");
    t.phase = frac(t.phase);
    if (t.phase.get_den() == 1 || t.phase.get_den() == 2 || t.phase.get_den() == 4) {
      fold_quarter(t.re, t.im, mpz_class(t.phase.get_num() * (4 / t.phase.get_den())).get_si());
      t.phase = 0;
    }
    if (t.re == 0 && t.im == 0) continue;
    terms_.push_back(std::move(t));
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.freq < b.freq; });
  for (size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].freq == terms_[i - 1].freq)
      throw Error(errc::precondition, "duplicate frequency in trig polynomial");
}

bool TrigPoly::is_real_valued() const {
  for (const auto& t : terms_) {
    IntVec neg(t.freq.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -t.freq[i];
    auto it = std::lower_bound(terms_.begin(), terms_.end(), neg,
                               [](const Term& a, const IntVec& f) { return a.freq < f; });
    if (it == terms_.end() || it->freq != neg) return false;
    if (it->re != t.re || it->im != -t.im || frac(it->phase + t.phase) != 0) return false;
  }
  return true;
}

double TrigPoly::eval_real(const RatVec& x, int precision_bits) const {
  if (static_cast<int>(x.size()) != n_) throw Error(errc::dimension_mismatch, "evaluation point dimension mismatch");
  mpfr_t acc, ang, c, s, tmp;
  mpfr_inits2(precision_bits, acc, ang, c, s, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(acc, 1);
  for (const auto& t : terms_) {
    mpq_class arg = t.phase;
    for (size_t i = 0; i < x.size(); ++i) arg += mpq_class(t.freq[i]) * x[i];
    arg = frac(arg);
    mpfr_set_q(ang, arg.get_mpq_t(), MPFR_RNDN);
    mpfr_const_pi(tmp, MPFR_RNDN);
    mpfr_mul(ang, ang, tmp, MPFR_RNDN);
    mpfr_mul_ui(ang, ang, 2, MPFR_RNDN);
    mpfr_sin_cos(s, c, ang, MPFR_RNDN);
    // real part of (re + i im) * e^{i ang}
    mpfr_set_q(tmp, t.re.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(tmp, tmp, c, MPFR_RNDN);
    mpfr_add(acc, acc, tmp, MPFR_RNDN);
    mpfr_set_q(tmp, t.im.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(tmp, tmp, s, MPFR_RNDN);
    mpfr_sub(acc, acc, tmp, MPFR_RNDN);
  }
  double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, ang, c, s, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

bool TrigPoly::operator==(const TrigPoly& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.freq != b.freq || a.re != b.re || a.im != b.im || a.phase != b.phase) return false;
  }
  return true;
}

TrigPoly coset_to_trig_poly(const ClosedSubgroup& g, const TorusPoint& y) {
  if (!g.is_connected()) throw Error(errc::not_connected, "coset_to_trig_poly requires a connected subgroup");
  int n = g.ambient_dim();
  std::vector<TrigPoly::Term> terms;
  int m = g.dual_rank();
  if (m == 0) return TrigPoly(n);  // h == 0 on the full torus
  terms.push_back({IntVec(n, mpz_class(0)), mpq_class(2 * m), mpq_class(0), mpq_class(0)});
  for (const auto& ell : g.dual_basis()) {
    mpq_class ly = dot(ell, y.coords());
    IntVec neg(n);
    for (int i = 0; i < n; ++i) neg[i] = -ell[i];
    terms.push_back({ell, mpq_class(-1), mpq_class(0), frac(-ly)});
    terms.push_back({neg, mpq_class(-1), mpq_class(0), frac(ly)});
  }
  return TrigPoly(n, std::move(terms));
}

}  // namespace toruskit
