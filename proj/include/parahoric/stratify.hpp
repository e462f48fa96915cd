#pragma once

#include "parahoric/affine.hpp"

#include <map>
#include <optional>
#include <vector>

namespace parahoric {

struct StratumReport {
  AffineElt w;
  long long length = 0;  // stratum dimension
  std::vector<AffineElt> closure;
  bool is_translation = false;
  std::optional<int> p_rank;  // GSp only
  bool is_in_smooth_locus = false;
};

struct StratificationSummary {
  Coweight mu;
  std::vector<StratumReport> strata;
  size_t components = 0;   // number of maximal strata
  long long top_dim = 0;
};

struct PermAdmReport {
  Coweight mu;
  bool minuscule = false;  // false: flagged "outside theorem scope"
  bool equal = false;
  bool adm_subset_perm = false;
  size_t adm_size = 0;
  size_t perm_size = 0;
  std::vector<AffineElt> adm_minus_perm;
  std::vector<AffineElt> perm_minus_adm;
};

// {w : w <= t_nu for some nu in W mu}; computed by downward closure
// from the translation elements (subword ideals of reduced words).
std::vector<AffineElt> adm_set(const DatumPtr& d, const Coweight& mu);

// {x in W_aff tau_mu : x(a) - a in Conv(W mu) for all base-alcove
// vertices a}; exact rational hull tests.
std::vector<AffineElt> perm_set(const DatumPtr& d, const Coweight& mu);

PermAdmReport verify_perm_eq_adm(const DatumPtr& d, const Coweight& mu);

// {x in Adm(mu) : x <= w}; requires w in Adm(mu).
std::vector<AffineElt> closure_set(const DatumPtr& d, const AffineElt& w,
                                   const Coweight& mu);

// Half the number of fixed points of the finite part (GSp only).
int p_rank(const AffineElt& w);

// Both are the translation strata {t_lam : lam in W mu}.
std::vector<AffineElt> ordinary_locus(const DatumPtr& d, const Coweight& mu);
std::vector<AffineElt> smooth_locus(const DatumPtr& d, const Coweight& mu);

// Maps each codimension-1 element of Adm(mu) to the translation
// elements above it (exactly two for minuscule mu).
std::map<AffineElt, std::vector<AffineElt>> codim1_incidence(const DatumPtr& d,
                                                             const Coweight& mu);

StratificationSummary stratification_report(const DatumPtr& d, const Coweight& mu);

}  // namespace parahoric
