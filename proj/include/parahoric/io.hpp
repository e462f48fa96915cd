#pragma once

#include "parahoric/hecke.hpp"
#include "parahoric/latmodel.hpp"
#include "parahoric/newton.hpp"
#include "parahoric/stratify.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace parahoric {

using OrderedJson = nlohmann::ordered_json;

OrderedJson group_to_json(const GroupDatum& d);
OrderedJson element_to_json(const AffineElt& x);
AffineElt element_from_json(const DatumPtr& d, const OrderedJson& j);

// CLI-facing schema: {mu, adm, perm, equal, strata: [...], components}.
OrderedJson stratify_to_json(const DatumPtr& d, const Coweight& mu);

// {mu, b_set: [{nu, kappa, basic}], mazur_ok, ...}
OrderedJson newton_to_json(const DatumPtr& d, const Coweight& mu);

OrderedJson perm_adm_report_to_json(const PermAdmReport& rep);

// Trace table TSV: element, length, sign, polynomial, value at q = p^r.
std::string trace_table_tsv(const DatumPtr& d, const Coweight& mu, long long p, int r);

// Test function TSV: element, length, z-coefficient, value of phi_r.
std::string test_function_tsv(const DatumPtr& d, const Coweight& mu, long long p, int r);

OrderedJson hecke_elt_to_json(const HeckeElt& h);

// Strata count TSV: element, length, count, expected q^l, match flag.
std::string strata_counts_tsv(const StrataCountReport& rep);

std::string dump_points_text(const DatumPtr& d, const Coweight& mu, int q);

}  // namespace parahoric
