#include "parahoric/figure.hpp"
#include "parahoric/io.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace parahoric;

namespace {

DatumPtr datum_of(const std::string& group, int n) {
  if (group != "gl" && group != "gsp")
    throw std::invalid_argument("group must be 'gl' or 'gsp'");
  return build_group_datum(group == "gl" ? Family::GL : Family::GSp, n);
}

Coweight default_mu(const DatumPtr& d, int dd) {
  Coweight mu(d->N, 0);
  if (d->family == Family::GL) {
    if (dd < 1 || dd >= d->n) throw std::invalid_argument("requires 0 < d < n");
    for (int i = d->N - dd; i < d->N; ++i) mu[i] = -1;
  } else {
    for (int i = d->n; i < d->N; ++i) mu[i] = -1;
  }
  return mu;
}

std::vector<std::string> texts(const std::vector<AffineElt>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_text(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(parahoric, m) {
  m.doc() = "exact combinatorics of parahoric local models for GL_n and GSp_2n";

  m.def("adm_set",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          return texts(adm_set(dat, default_mu(dat, d)));
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);

  m.def("perm_set",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          return texts(perm_set(dat, default_mu(dat, d)));
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);

  m.def("perm_equals_adm",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          return verify_perm_eq_adm(dat, default_mu(dat, d)).equal;
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);

  m.def("length",
        [](const std::string& g, int n, const std::string& elt) {
          auto dat = datum_of(g, n);
          return length(parse_element(dat, elt));
        },
        py::arg("group"), py::arg("n"), py::arg("elt"));

  m.def("bruhat_leq",
        [](const std::string& g, int n, const std::string& x, const std::string& y) {
          auto dat = datum_of(g, n);
          return bruhat_leq(parse_element(dat, x), parse_element(dat, y));
        },
        py::arg("group"), py::arg("n"), py::arg("x"), py::arg("y"));

  m.def("tau",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          return to_text(tau_element(dat, default_mu(dat, d)));
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);

  m.def("newton_point",
        [](const std::string& g, int n, const std::string& elt) {
          auto dat = datum_of(g, n);
          std::vector<std::string> out;
          for (const auto& s : newton_point(parse_element(dat, elt)).slopes)
            out.push_back(rat_to_string(s));
          return out;
        },
        py::arg("group"), py::arg("n"), py::arg("elt"));

  m.def("b_of_g_mu",
        [](const std::string& g, int n, const Coweight& mu) {
          auto dat = datum_of(g, n);
          std::vector<std::vector<std::string>> out;
          for (const auto& nu : b_of_g_mu(dat, mu)) {
            std::vector<std::string> row;
            for (const auto& s : nu.slopes) row.push_back(rat_to_string(s));
            out.push_back(std::move(row));
          }
          return out;
        },
        py::arg("group"), py::arg("n"), py::arg("mu"));

  m.def("mazur_ok",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          auto rep = mazur_check(dat, default_mu(dat, d));
          return rep.kappa_ok && rep.mazur_ok;
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);

  m.def("bernstein_support",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          HeckeElt z = bernstein_z(dat, default_mu(dat, d));
          std::vector<std::string> out;
          for (const auto& [x, c] : z.coeffs()) out.push_back(to_text(x));
          return out;
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);

  m.def("test_function",
        [](const std::string& g, int n, int d, long long p, int r) {
          auto dat = datum_of(g, n);
          Coweight mu = default_mu(dat, d);
          long long dim = length(translation_elt(dat, dominant_representative(*dat, mu)));
          std::map<std::string, long long> out;
          for (const auto& [x, v] : test_function(dat, mu, p, r, dim))
            out[to_text(x)] = v;
          return out;
        },
        py::arg("group"), py::arg("n"), py::arg("d"), py::arg("p"), py::arg("r") = 1);

  m.def("strata_counts",
        [](const std::string& g, int n, int d, int q) {
          auto dat = datum_of(g, n);
          auto rep = strata_point_counts(dat, default_mu(dat, d), q);
          std::map<std::string, long long> out;
          for (const auto& [w, c] : rep.counts) out[to_text(w)] = c;
          return out;
        },
        py::arg("group"), py::arg("n"), py::arg("d"), py::arg("q") = 2);

  m.def("stratification_json",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          return stratify_to_json(dat, default_mu(dat, d)).dump();
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);

  m.def("alcove_figure_svg",
        [](const std::string& g, int n, int d) {
          auto dat = datum_of(g, n);
          return alcove_figure_svg(dat, default_mu(dat, d));
        },
        py::arg("group"), py::arg("n"), py::arg("d") = 1);
}
