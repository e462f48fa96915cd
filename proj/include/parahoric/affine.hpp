#pragma once

#include "parahoric/group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parahoric {

// Element of the extended affine Weyl group, x = t_nu * wbar.
// Acts on X_*(T) (x) R by v -> nu + wbar(v).
struct AffineElt {
  Coweight nu;
  Perm wbar;
  DatumPtr datum;

  bool is_translation() const;
  bool is_identity() const;

  bool operator==(const AffineElt& o) const { return nu == o.nu && wbar == o.wbar; }
  bool operator!=(const AffineElt& o) const { return !(*this == o); }
  bool operator<(const AffineElt& o) const {
    if (nu != o.nu) return nu < o.nu;
    return wbar < o.wbar;
  }

  RatVec apply(const RatVec& v) const;
};

AffineElt identity_elt(const DatumPtr& d);
AffineElt translation_elt(const DatumPtr& d, const Coweight& nu);
AffineElt finite_elt(const DatumPtr& d, const Perm& w);
AffineElt make_elt(const DatumPtr& d, const Coweight& nu, const Perm& w);

AffineElt multiply(const AffineElt& x, const AffineElt& y);
AffineElt invert(const AffineElt& x);
AffineElt power(const AffineElt& x, long long k);

// Iwahori-Matsumoto length: the number of affine root hyperplanes
// separating the base alcove from its image under x.
long long length(const AffineElt& x);

// Image of the translation part in X_*/Q^vee, identified with Z.
long long kottwitz_index(const AffineElt& x);

// The affine simple reflections S_aff: the finite simple reflections
// followed by s_0 = t_{-theta^vee} s_theta for the highest root theta.
std::vector<AffineElt> simple_reflections(const DatumPtr& d);

// Omega generator tau_1 and the length-zero element congruent to t_mu
// modulo W_aff.
AffineElt omega_generator(const DatumPtr& d);
AffineElt tau_element(const DatumPtr& d, const Coweight& mu);

// Decomposition x = s_{i_1} ... s_{i_k} * omega with the word reduced;
// the word stores indices into simple_reflections(d).
struct OmegaDecomposition {
  std::vector<int> word;
  AffineElt omega;
};
OmegaDecomposition omega_decompose(const AffineElt& x);

// Bruhat order on the extended affine Weyl group: elements with
// distinct Omega components are incomparable.  Memoized internally;
// thread-safe.
bool bruhat_leq(const AffineElt& x, const AffineElt& y);

// Canonical text form "t[n1,...,nk]*w[i1,...,ik]" (1-based one-line
// permutation); parses back exactly.
std::string to_text(const AffineElt& x);
AffineElt parse_element(const DatumPtr& d, const std::string& text);

void require_same_group(const AffineElt& x, const AffineElt& y);

}  // namespace parahoric
