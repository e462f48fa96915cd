#pragma once

#include "parahoric/affine.hpp"

#include <map>
#include <string>
#include <vector>

namespace parahoric {

// Arithmetic in F_q for q in {2, 3, 4}; elements are 0..q-1, with
// F_4 = F_2[x]/(x^2+x+1) encoded as 0, 1, 2 = x, 3 = x+1.
struct GFq {
  int q = 2;
  explicit GFq(int q_);
  int add(int a, int b) const { return add_[a][b]; }
  int sub(int a, int b) const { return add_[a][neg_[b]]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;

 private:
  int add_[4][4] = {};
  int mul_[4][4] = {};
  int neg_[4] = {};
};

// Row basis in reduced row echelon form.
using Subspace = std::vector<std::vector<int>>;

// A point of the local-model special fiber over F_q: the subspaces
// U_i = L_i / tV_i in the standard basis of V_i / tV_i.
struct ChainPoint {
  Family family = Family::GL;
  int n = 0;
  int d = 0;  // corank (GL); equals n for GSp
  int q = 2;
  std::vector<Subspace> layers;  // GL: U_0..U_{n-1}; GSp: U_0..U_n
};

struct StrataCountReport {
  Coweight mu;
  int q = 0;
  std::map<AffineElt, long long> counts;  // stratum label -> point count
  long long total = 0;
  bool index_set_matches_adm = false;
  bool counts_match_cells = false;  // every count equals q^{l(w)}
};

// Complete duplicate-free enumeration of the special fiber.
// Bounds: q in {2,3,4}; GL with n <= 3, GSp with n <= 2.
std::vector<ChainPoint> enumerate_special_fiber(const DatumPtr& d, const Coweight& mu,
                                                int q);

// The unique w with L_bullet = w . V_bullet modulo the Iwahori, found
// by exact reduction to a monomial-permutation normal form over
// F_q[t].  The KR stratum of the point is labeled by invert(w).
AffineElt rel_position_iwahori(const DatumPtr& d, const ChainPoint& point);

StrataCountReport strata_point_counts(const DatumPtr& d, const Coweight& mu, int q);

// True iff stratum w lies in the closure of stratum w' (computed at
// the point-count level) exactly when bruhat_leq(w, w') says so.
bool closure_witness(const DatumPtr& d, const Coweight& mu, int q, const AffineElt& w,
                     const AffineElt& wp);

// Adapted generator matrix of the chain over F_q[t]/(t^2): entry (k, i)
// is (constant, t-coefficient); column i spans L_{i+1} over L_i, and the
// columns together form an F_q[t]-basis of L_0.
std::vector<std::vector<std::array<int, 2>>> chain_matrix(const DatumPtr& d,
                                                          const ChainPoint& p);

// Plain-text grid of one point: rows of each U_i over F_q, then the
// adapted matrix over F_q[t]/(t^2).
std::string dump_point(const DatumPtr& d, const ChainPoint& p);

}  // namespace parahoric
