#include "parahoric/stratify.hpp"

#include <algorithm>
#include <set>

namespace parahoric {

namespace {

std::set<AffineElt> bruhat_ideal(const AffineElt& y) {
  auto d = y.datum;
  auto gens = simple_reflections(d);
  OmegaDecomposition dec = omega_decompose(y);
  std::set<AffineElt> cur{identity_elt(d)};
  for (int gi : dec.word) {
    std::set<AffineElt> next = cur;
    for (const auto& x : cur) next.insert(multiply(x, gens[gi]));
    cur = std::move(next);
  }
  std::set<AffineElt> out;
  for (const auto& x : cur) out.insert(multiply(x, dec.omega));
  return out;
}

}  // namespace

std::vector<AffineElt> adm_set(const DatumPtr& d, const Coweight& mu) {
  require_coweight(*d, mu);
  std::set<AffineElt> acc;
  for (const auto& nu : weyl_orbit(*d, mu)) {
    auto ideal = bruhat_ideal(translation_elt(d, nu));
    acc.insert(ideal.begin(), ideal.end());
  }
  return {acc.begin(), acc.end()};
}

std::vector<AffineElt> perm_set(const DatumPtr& d, const Coweight& mu) {
  require_coweight(*d, mu);
  long long kappa = central_coordinate(*d, mu);
  auto vertices = base_alcove_vertices(*d);

  long long lo = 0, hi = 0;
  for (auto v : mu) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  lo -= 1;
  hi += 1;  // vertex offsets lie in [-1, 1] coordinatewise

  std::vector<AffineElt> out;
  auto consider = [&](const Coweight& nu, const Perm& w) {
    AffineElt x = make_elt(d, nu, w);
    for (const auto& a : vertices) {
      RatVec diff = x.apply(a) - a;
      if (!in_convex_hull(*d, diff, mu)) return;
    }
    out.push_back(std::move(x));
  };

  if (d->family == Family::GL) {
    int n = d->N;
    for (const auto& w : finite_weyl_elements(*d)) {
      Coweight nu(n, lo);
      while (true) {
        long long s = 0;
        for (auto v : nu) s += v;
        if (s == kappa) consider(nu, w);
        int i = 0;
        while (i < n && nu[i] == hi) nu[i++] = lo;
        if (i == n) break;
        ++nu[i];
      }
    }
  } else {
    int n = d->n, N = d->N;
    for (const auto& w : finite_weyl_elements(*d)) {
      std::vector<long long> a(n, lo);
      while (true) {
        Coweight nu(N);
        for (int i = 0; i < n; ++i) {
          nu[i] = a[i];
          nu[N - 1 - i] = kappa - a[i];
        }
        consider(nu, w);
        int i = 0;
        while (i < n && a[i] == hi) a[i++] = lo;
        if (i == n) break;
        ++a[i];
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PermAdmReport verify_perm_eq_adm(const DatumPtr& d, const Coweight& mu) {
  PermAdmReport rep;
  rep.mu = mu;
  rep.minuscule = is_minuscule(*d, mu);
  auto adm = adm_set(d, mu);
  auto perm = perm_set(d, mu);
  rep.adm_size = adm.size();
  rep.perm_size = perm.size();
  std::set<AffineElt> aset(adm.begin(), adm.end()), pset(perm.begin(), perm.end());
  for (const auto& x : adm)
    if (!pset.count(x)) rep.adm_minus_perm.push_back(x);
  for (const auto& x : perm)
    if (!aset.count(x)) rep.perm_minus_adm.push_back(x);
  rep.adm_subset_perm = rep.adm_minus_perm.empty();
  rep.equal = rep.adm_subset_perm && rep.perm_minus_adm.empty();
  return rep;
}

std::vector<AffineElt> closure_set(const DatumPtr& d, const AffineElt& w,
                                   const Coweight& mu) {
  auto adm = adm_set(d, mu);
  if (std::find(adm.begin(), adm.end(), w) == adm.end())
    throw std::invalid_argument("closure_set: element not in Adm(mu)");
  std::vector<AffineElt> out;
  for (const auto& x : adm)
    if (bruhat_leq(x, w)) out.push_back(x);
  return out;
}

int p_rank(const AffineElt& w) {
  if (w.datum->family != Family::GSp)
    throw std::invalid_argument("p_rank is defined for GSp only");
  int fixed = 0;
  for (size_t i = 0; i < w.wbar.size(); ++i)
    if (w.wbar[i] == int(i)) ++fixed;
  return fixed / 2;
}

std::vector<AffineElt> ordinary_locus(const DatumPtr& d, const Coweight& mu) {
  if (d->family != Family::GSp)
    throw std::invalid_argument("ordinary_locus is defined for GSp only");
  return smooth_locus(d, mu);
}

std::vector<AffineElt> smooth_locus(const DatumPtr& d, const Coweight& mu) {
  std::vector<AffineElt> out;
  for (const auto& lam : weyl_orbit(*d, mu)) out.push_back(translation_elt(d, lam));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<AffineElt, std::vector<AffineElt>> codim1_incidence(const DatumPtr& d,
                                                             const Coweight& mu) {
  auto adm = adm_set(d, mu);
  AffineElt tmu = translation_elt(d, dominant_representative(*d, mu));
  long long top = length(tmu);
  auto translations = smooth_locus(d, mu);
  std::map<AffineElt, std::vector<AffineElt>> out;
  for (const auto& x : adm) {
    if (length(x) != top - 1) continue;
    std::vector<AffineElt> above;
    for (const auto& t : translations)
      if (bruhat_leq(x, t)) above.push_back(t);
    out.emplace(x, std::move(above));
  }
  return out;
}

StratificationSummary stratification_report(const DatumPtr& d, const Coweight& mu) {
  StratificationSummary sum;
  sum.mu = mu;
  auto adm = adm_set(d, mu);
  AffineElt tmu = translation_elt(d, dominant_representative(*d, mu));
  sum.top_dim = length(tmu);
  sum.components = weyl_orbit(*d, mu).size();
  for (const auto& w : adm) {
    StratumReport rep;
    rep.w = w;
    rep.length = length(w);
    rep.closure = closure_set(d, w, mu);
    rep.is_translation = w.is_translation();
    rep.is_in_smooth_locus = rep.is_translation;
    if (d->family == Family::GSp) rep.p_rank = p_rank(w);
    sum.strata.push_back(std::move(rep));
  }
  return sum;
}

}  // namespace parahoric
