#include "parahoric/io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace parahoric {

OrderedJson group_to_json(const GroupDatum& d) {
  OrderedJson j;
  j["family"] = d.family_name();
  j["n"] = d.n;
  return j;
}

OrderedJson element_to_json(const AffineElt& x) {
  OrderedJson j;
  j["nu"] = x.nu;
  std::vector<int> w;
  for (int v : x.wbar) w.push_back(v + 1);
  j["wbar"] = w;
  j["group"] = group_to_json(*x.datum);
  return j;
}

AffineElt element_from_json(const DatumPtr& d, const OrderedJson& j) {
  if (j.contains("group")) {
    const auto& g = j.at("group");
    if (g.at("family").get<std::string>() != d->family_name() ||
        g.at("n").get<int>() != d->n)
      throw std::invalid_argument("element JSON carries a different group tag");
  }
  Coweight nu = j.at("nu").get<Coweight>();
  auto ws = j.at("wbar").get<std::vector<int>>();
  if (int(ws.size()) != d->N) throw std::invalid_argument("wbar has wrong size");
  Perm w(d->N);
  std::vector<bool> seen(d->N, false);
  for (int i = 0; i < d->N; ++i) {
    int v = ws[i] - 1;
    if (v < 0 || v >= d->N || seen[v])
      throw std::invalid_argument("wbar is not a permutation");
    seen[v] = true;
    w[i] = v;
  }
  return make_elt(d, nu, w);
}

OrderedJson stratify_to_json(const DatumPtr& d, const Coweight& mu) {
  OrderedJson j;
  j["mu"] = mu;
  auto rep = verify_perm_eq_adm(d, mu);
  OrderedJson adm = OrderedJson::array(), perm = OrderedJson::array();
  for (const auto& x : adm_set(d, mu)) adm.push_back(to_text(x));
  for (const auto& x : perm_set(d, mu)) perm.push_back(to_text(x));
  j["adm"] = adm;
  j["perm"] = perm;
  j["equal"] = rep.equal;
  j["minuscule"] = rep.minuscule;
  if (!rep.minuscule) j["scope"] = "outside theorem scope";
  auto sum = stratification_report(d, mu);
  OrderedJson strata = OrderedJson::array();
  for (const auto& s : sum.strata) {
    OrderedJson js;
    js["w"] = to_text(s.w);
    js["length"] = s.length;
    if (s.p_rank) js["p_rank"] = *s.p_rank;
    js["smooth"] = s.is_in_smooth_locus;
    OrderedJson cl = OrderedJson::array();
    for (const auto& c : s.closure) cl.push_back(to_text(c));
    js["closure"] = cl;
    strata.push_back(std::move(js));
  }
  j["strata"] = strata;
  j["components"] = sum.components;
  return j;
}

OrderedJson newton_to_json(const DatumPtr& d, const Coweight& mu) {
  OrderedJson j;
  j["mu"] = mu;
  auto rep = mazur_check(d, mu);
  OrderedJson bset = OrderedJson::array();
  for (const auto& nu : rep.b_set) {
    OrderedJson jb;
    OrderedJson slopes = OrderedJson::array();
    for (const auto& s : nu.slopes) slopes.push_back(rat_to_string(s));
    jb["nu"] = slopes;
    jb["kappa"] = kottwitz_point_of_coweight(*d, mu);
    jb["basic"] = is_basic_point(*d, nu);
    bset.push_back(std::move(jb));
  }
  j["b_set"] = bset;
  j["mazur_ok"] = rep.mazur_ok && rep.kappa_ok;
  j["kappa_ok"] = rep.kappa_ok;
  j["newton_points_in_b_set"] = rep.contained_in_b_set;
  j["exhausts_b_set"] = rep.exhausts_b_set;
  OrderedJson pts = OrderedJson::array();
  for (const auto& nu : rep.newton_points) {
    OrderedJson slopes = OrderedJson::array();
    for (const auto& s : nu.slopes) slopes.push_back(rat_to_string(s));
    pts.push_back(std::move(slopes));
  }
  j["adm_newton_points"] = pts;
  return j;
}

OrderedJson perm_adm_report_to_json(const PermAdmReport& rep) {
  OrderedJson j;
  j["mu"] = rep.mu;
  j["minuscule"] = rep.minuscule;
  if (!rep.minuscule) j["scope"] = "outside theorem scope";
  j["adm_size"] = rep.adm_size;
  j["perm_size"] = rep.perm_size;
  j["equal"] = rep.equal;
  j["adm_subset_perm"] = rep.adm_subset_perm;
  OrderedJson a = OrderedJson::array(), b = OrderedJson::array();
  for (const auto& x : rep.adm_minus_perm) a.push_back(to_text(x));
  for (const auto& x : rep.perm_minus_adm) b.push_back(to_text(x));
  j["adm_minus_perm"] = a;
  j["perm_minus_adm"] = b;
  return j;
}

std::string trace_table_tsv(const DatumPtr& d, const Coweight& mu, long long p, int r) {
  auto table = trace_table(d, mu);
  AffineElt tmu = translation_elt(d, dominant_representative(*d, mu));
  long long ltmu = length(tmu);
  std::ostringstream os;
  os << "element\tlength\tsign\tpolynomial\tvalue_q=" << p << "^" << r << "\n";
  for (const auto& [w, poly] : table) {
    long long lw = length(w);
    int sign = (ltmu + lw) % 2 == 0 ? 1 : -1;
    os << to_text(w) << "\t" << lw << "\t" << (sign > 0 ? "+" : "-") << "\t"
       << poly.to_string() << "\t" << poly.eval_v_sqrt_q(p, r) << "\n";
  }
  return os.str();
}

std::string test_function_tsv(const DatumPtr& d, const Coweight& mu, long long p,
                              int r) {
  AffineElt tmu = translation_elt(d, dominant_representative(*d, mu));
  long long dim = length(tmu);
  HeckeElt z = bernstein_z(d, mu);
  auto phi = test_function(d, mu, p, r, dim);
  std::ostringstream os;
  os << "element\tlength\tz_coefficient\tphi_" << r << "(p=" << p << ")\n";
  for (const auto& [x, val] : phi)
    os << to_text(x) << "\t" << length(x) << "\t" << z.coeff(x).to_string() << "\t"
       << val << "\n";
  return os.str();
}

OrderedJson hecke_elt_to_json(const HeckeElt& h) {
  OrderedJson j;
  OrderedJson coeffs = OrderedJson::array();
  for (const auto& [x, poly] : h.coeffs()) {
    OrderedJson jc;
    jc["elt"] = to_text(x);
    OrderedJson terms = OrderedJson::array();
    for (const auto& [e, c] : poly.terms()) terms.push_back(OrderedJson::array({e, c}));
    jc["poly"] = terms;
    coeffs.push_back(std::move(jc));
  }
  j["coeffs"] = coeffs;
  return j;
}

std::string strata_counts_tsv(const StrataCountReport& rep) {
  std::ostringstream os;
  os << "element\tlength\tcount\texpected\tmatch\n";
  long long expected_total = 0;
  for (const auto& [w, c] : rep.counts) {
    long long expect = 1;
    for (long long i = 0; i < length(w); ++i) expect *= rep.q;
    expected_total += expect;
    os << to_text(w) << "\t" << length(w) << "\t" << c << "\t" << expect << "\t"
       << (c == expect ? "ok" : "MISMATCH") << "\n";
  }
  os << "total\t\t" << rep.total << "\t" << expected_total << "\t"
     << (rep.total == expected_total && rep.counts_match_cells &&
                 rep.index_set_matches_adm
             ? "ok"
             : "MISMATCH")
     << "\n";
  return os.str();
}

std::string dump_points_text(const DatumPtr& d, const Coweight& mu, int q) {
  auto points = enumerate_special_fiber(d, mu, q);
  std::ostringstream os;
  os << "# chain points over F_" << q << " (entries of F_4: 2 = x, 3 = x+1)\n";
  for (size_t i = 0; i < points.size(); ++i) {
    os << "point " << i << " stratum "
       << to_text(invert(rel_position_iwahori(d, points[i]))) << "\n";
    os << dump_point(d, points[i]);
  }
  return os.str();
}

}  // namespace parahoric
