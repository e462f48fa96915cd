#pragma once

#include "parahoric/affine.hpp"
#include "parahoric/laurent.hpp"

#include <map>

namespace parahoric {

// Element of the Iwahori-Hecke algebra of the extended affine Weyl
// group, written in the T-basis.  Convention: T_s^2 = (q-1) T_s + q,
// with T_x T_y = T_{xy} whenever lengths add; v^2 = q.
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(DatumPtr d) : datum_(std::move(d)) {}

  static HeckeElt basis(const AffineElt& x);
  static HeckeElt unit(const DatumPtr& d);

  const DatumPtr& datum() const { return datum_; }
  const std::map<AffineElt, LaurentPoly>& coeffs() const { return coeffs_; }
  LaurentPoly coeff(const AffineElt& x) const;
  bool is_zero() const { return coeffs_.empty(); }
  size_t support_size() const { return coeffs_.size(); }

  void add(const AffineElt& x, const LaurentPoly& c);
  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  bool operator==(const HeckeElt& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }
  HeckeElt scaled(const LaurentPoly& c) const;

  // Right multiplication by T_s (s a simple affine reflection), by
  // T_s^{-1}, and by T_omega for omega of length zero.
  HeckeElt mult_Ts(const AffineElt& s) const;
  HeckeElt mult_Ts_inverse(const AffineElt& s) const;
  HeckeElt mult_Tomega(const AffineElt& omega) const;

 private:
  DatumPtr datum_;
  std::map<AffineElt, LaurentPoly> coeffs_;
};

// Full convolution product in the T-basis.
HeckeElt hecke_multiply(const HeckeElt& a, const HeckeElt& b);

// T_w^{-1}, expanded in the T-basis.
HeckeElt t_inverse(const AffineElt& w);

// Kazhdan-Lusztig R-polynomial R_{x,y}(q); zero unless x <= y, and the
// two elements lie in a common Omega coset.  Memoized; thread-safe.
LaurentPoly r_polynomial(const AffineElt& x, const AffineElt& y);

// Bernstein element Theta_lambda = tT_{t_{lam1}} * tT_{t_{lam2}}^{-1}
// for lambda = lam1 - lam2 with both parts dominant, where
// tT_w = v^{-l(w)} T_w.  Independent of the decomposition.
HeckeElt theta(const DatumPtr& d, const Coweight& lambda);

// z_mu = sum of Theta_lambda over the Weyl orbit of mu (mu minuscule).
// Central; supported on the mu-admissible set.
HeckeElt bernstein_z(const DatumPtr& d, const Coweight& mu);

// Indicator of the hyperspecial maximal compact: sum of T_w over the
// finite Weyl group.
HeckeElt spherical_idempotent_numerator(const DatumPtr& d);

// Right convolution with the above; input must be central.
HeckeElt spherical_image(const HeckeElt& z);

bool commutes_with_generators(const HeckeElt& h);

// Value of the semisimple trace function at each w in Adm(mu):
// (-1)^{l(t_mu)+l(w)} R_{w, t_{lambda(w)}}(q).
std::map<AffineElt, LaurentPoly> trace_table(const DatumPtr& d, const Coweight& mu);

// The test function p^{r*dim/2} z_{mu} specialized at q = p^r, as exact
// integers.  dim must equal l(t_mu); r >= 1; p prime.
std::map<AffineElt, long long> test_function(const DatumPtr& d, const Coweight& mu,
                                             long long p, int r, long long dim);

}  // namespace parahoric
