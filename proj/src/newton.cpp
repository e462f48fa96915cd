#include "parahoric/newton.hpp"

#include "parahoric/stratify.hpp"

#include <algorithm>
#include <set>

namespace parahoric {

NewtonPoint newton_point(const AffineElt& x) {
  int s = perm_order(x.wbar);
  AffineElt xs = power(x, s);
  RatVec slopes(x.datum->N);
  for (int i = 0; i < x.datum->N; ++i) slopes[i] = Rat(xs.nu[i], s);
  return NewtonPoint{dominant_representative(*x.datum, slopes)};
}

long long kottwitz_point(const AffineElt& x) {
  return central_coordinate(*x.datum, x.nu);
}

long long kottwitz_point_of_coweight(const GroupDatum& d, const Coweight& mu) {
  return central_coordinate(d, mu);
}

bool is_basic_point(const GroupDatum& d, const NewtonPoint& nu) {
  for (const auto& e : d.positive_roots)
    if (pairing_rat(e.root, nu.slopes) != Rat(0)) return false;
  return true;
}

bool is_basic(const AffineElt& x) { return is_basic_point(*x.datum, newton_point(x)); }

bool dominance_leq(const GroupDatum& d, const NewtonPoint& a, const NewtonPoint& b,
                   bool* incomparable) {
  if (incomparable) *incomparable = false;
  if (central_coordinate_rat(d, a.slopes) != central_coordinate_rat(d, b.slopes)) {
    if (incomparable) *incomparable = true;
    return false;
  }
  if (d.family == Family::GSp) {
    // Both must be self-dual for the comparison to make sense.
    for (const NewtonPoint* p : {&a, &b}) {
      Rat c = p->slopes[0] + p->slopes[d.N - 1];
      for (int i = 0; i < d.n; ++i)
        if (p->slopes[i] + p->slopes[d.N - 1 - i] != c) {
          if (incomparable) *incomparable = true;
          return false;
        }
    }
  }
  int limit = d.family == Family::GL ? d.N - 1 : d.n;
  Rat s(0);
  for (int k = 0; k < limit; ++k) {
    s += b.slopes[k] - a.slopes[k];
    if (s < Rat(0)) return false;
  }
  return true;
}

namespace {

// Enumerates concave piecewise-linear paths from (0,0) to (N, total)
// with integral breakpoints, staying weakly below the concave path of
// partial sums bound[1..N].  Slopes are the Newton slopes.
void enumerate_polygons(int N, long long total, const std::vector<Rat>& bound,
                        long long slope_lo, long long slope_hi, int k, long long h,
                        Rat prev_slope, bool have_prev, RatVec& acc,
                        std::vector<RatVec>& out) {
  if (k == N) {
    if (h == total) out.push_back(acc);
    return;
  }
  for (int k2 = k + 1; k2 <= N; ++k2) {
    long long span = k2 - k;
    for (long long h2 = h + span * slope_lo; h2 <= h + span * slope_hi; ++h2) {
      Rat slope(h2 - h, span);
      if (have_prev && !(slope < prev_slope)) continue;
      // Remaining segments have slopes < slope; reaching (N, total) needs
      // total - h2 < slope * (N - k2) unless k2 == N.
      if (k2 < N && !(Rat(total - h2) < slope * Rat(N - k2))) continue;
      if (k2 == N && h2 != total) continue;
      bool ok = true;
      for (int j = k + 1; j <= k2 && ok; ++j)
        if (Rat(h) + slope * Rat(j - k) > bound[j]) ok = false;
      if (!ok) continue;
      for (int j = k; j < k2; ++j) acc[j] = slope;
      enumerate_polygons(N, total, bound, slope_lo, slope_hi, k2, h2, slope, true,
                         acc, out);
    }
  }
}

}  // namespace

std::vector<NewtonPoint> b_of_g_mu(const DatumPtr& d, const Coweight& mu) {
  require_coweight(*d, mu);
  int N = d->N;
  if (N > 8)
    throw std::invalid_argument("b_of_g_mu: exhaustive enumeration limited to N <= 8");
  Coweight mubar = dominant_representative(*d, mu);
  std::vector<Rat> bound(N + 1, Rat(0));
  long long total = 0;
  long long slope_lo = mubar[N - 1], slope_hi = mubar[0];
  for (int k = 0; k < N; ++k) {
    total += mubar[k];
    bound[k + 1] = Rat(total);
  }
  RatVec acc(N);
  std::vector<RatVec> paths;
  enumerate_polygons(N, total, bound, slope_lo, slope_hi, 0, 0, Rat(0), false, acc,
                     paths);
  std::vector<NewtonPoint> out;
  for (auto& p : paths) {
    if (d->family == Family::GSp) {
      Rat c = p[0] + p[N - 1];
      bool selfdual = c == Rat(central_coordinate(*d, mu));
      for (int i = 0; i < d->n && selfdual; ++i)
        if (p[i] + p[N - 1 - i] != c) selfdual = false;
      if (!selfdual) continue;
    }
    out.push_back(NewtonPoint{std::move(p)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

MazurReport mazur_check(const DatumPtr& d, const Coweight& mu) {
  MazurReport rep;
  rep.mu = mu;
  Coweight mubar = dominant_representative(*d, mu);
  NewtonPoint top{to_rat_vec(mubar)};
  long long kappa = kottwitz_point_of_coweight(*d, mu);
  rep.kappa_ok = true;
  rep.mazur_ok = true;
  std::set<NewtonPoint> pts;
  for (const auto& x : adm_set(d, mu)) {
    if (kottwitz_point(x) != kappa) rep.kappa_ok = false;
    NewtonPoint nu = newton_point(x);
    bool incomparable = false;
    if (!dominance_leq(*d, nu, top, &incomparable) || incomparable)
      rep.mazur_ok = false;
    pts.insert(std::move(nu));
  }
  rep.newton_points.assign(pts.begin(), pts.end());
  rep.b_set = b_of_g_mu(d, mu);
  std::set<NewtonPoint> bset(rep.b_set.begin(), rep.b_set.end());
  rep.contained_in_b_set = true;
  for (const auto& nu : pts)
    if (!bset.count(nu)) rep.contained_in_b_set = false;
  rep.exhausts_b_set = rep.contained_in_b_set && pts == bset;
  return rep;
}

}  // namespace parahoric
