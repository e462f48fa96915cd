#pragma once

#include "parahoric/affine.hpp"

#include <vector>

namespace parahoric {

// Dominant rational slope vector; for GSp the self-duality
// nu_i + nu_{2n+1-i} = c holds with c the similitude coordinate.
struct NewtonPoint {
  RatVec slopes;
  bool operator==(const NewtonPoint& o) const { return slopes == o.slopes; }
  bool operator!=(const NewtonPoint& o) const { return !(*this == o); }
  bool operator<(const NewtonPoint& o) const { return slopes < o.slopes; }
};

struct MazurReport {
  Coweight mu;
  bool kappa_ok = false;       // every Adm element has the Kottwitz point of t_mu
  bool mazur_ok = false;       // every Newton point is <= dominant(mu)
  bool contained_in_b_set = false;  // every Adm Newton point lies in B(G, mu)
  bool exhausts_b_set = false;      // Newton points over Adm cover B(G, mu)
  std::vector<NewtonPoint> newton_points;  // deduplicated, sorted
  std::vector<NewtonPoint> b_set;
};

// Newton point: with s the order of the finite part, the dominant
// representative of (translation part of x^s)/s.
NewtonPoint newton_point(const AffineElt& x);

// Image of the translation part in the coinvariant lattice (Z for both
// families: coordinate sum for GL, similitude coordinate for GSp).
long long kottwitz_point(const AffineElt& x);
long long kottwitz_point_of_coweight(const GroupDatum& d, const Coweight& mu);

// Central Newton point, i.e. all root pairings vanish.
bool is_basic(const AffineElt& x);
bool is_basic_point(const GroupDatum& d, const NewtonPoint& nu);

// Dominance order on dominant rational vectors with equal Kottwitz
// point; on unequal Kottwitz points returns false and sets the flag.
bool dominance_leq(const GroupDatum& d, const NewtonPoint& a, const NewtonPoint& b,
                   bool* incomparable = nullptr);

// B(G, mu): every dominant slope vector with integral polygon
// breakpoints, the Kottwitz point of mu, and Newton point <= dominant
// rep of mu.  Exhaustive for N <= 8.
std::vector<NewtonPoint> b_of_g_mu(const DatumPtr& d, const Coweight& mu);

MazurReport mazur_check(const DatumPtr& d, const Coweight& mu);

}  // namespace parahoric
