#include "parahoric/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace parahoric {

namespace {

std::pair<double, double> project(const GroupDatum& d, const RatVec& v) {
  auto dbl = [](const Rat& r) {
    return double(r.numerator()) / double(r.denominator());
  };
  if (d.family == Family::GL) {
    // Quotient by the central line, drawn in the A_2 lattice basis.
    double u = dbl(v[0] - v[1]);
    double w = dbl(v[1] - v[2]);
    return {u + 0.5 * w, w * 0.8660254037844386};
  }
  Rat c = v[0] + v[d.N - 1];
  return {dbl(v[0] - c / 2), dbl(v[1] - c / 2)};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x + 0.0);  // avoid signed zero
  return std::string(buf);
}

}  // namespace

std::string alcove_figure_svg(const DatumPtr& d, const Coweight& mu) {
  bool rank2 = (d->family == Family::GL && d->n == 3) ||
               (d->family == Family::GSp && d->n == 2);
  if (!rank2)
    throw std::invalid_argument("alcove figure: rank-2 only (GL_3 or GSp_4)");

  auto adm = adm_set(d, mu);
  std::sort(adm.begin(), adm.end(),
            [](const AffineElt& a, const AffineElt& b) { return to_text(a) < to_text(b); });
  auto vertices = base_alcove_vertices(*d);
  AffineElt tau = tau_element(d, mu);

  struct Poly {
    std::string label;
    bool translation;
    bool base;
    std::vector<std::pair<double, double>> pts;
  };
  std::vector<Poly> polys;
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  for (const auto& x : adm) {
    Poly p;
    p.label = to_text(x);
    p.translation = x.is_translation();
    p.base = (x == tau);
    for (const auto& a : vertices) {
      auto [px, py] = project(*d, x.apply(a));
      p.pts.emplace_back(px, py);
      xmin = std::min(xmin, px);
      xmax = std::max(xmax, px);
      ymin = std::min(ymin, py);
      ymax = std::max(ymax, py);
    }
    polys.push_back(std::move(p));
  }

  const double scale = 140.0, margin = 30.0;
  double W = (xmax - xmin) * scale + 2 * margin;
  double H = (ymax - ymin) * scale + 2 * margin;
  auto X = [&](double x) { return margin + (x - xmin) * scale; };
  auto Y = [&](double y) { return H - margin - (y - ymin) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
     << fmt(H) << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H) << "\">\n";
  os << "<title>admissible alcoves " << d->family_name() << d->N << "</title>\n";
  for (const auto& p : polys) {
    os << "<polygon points=\"";
    for (size_t i = 0; i < p.pts.size(); ++i) {
      if (i) os << " ";
      os << fmt(X(p.pts[i].first)) << "," << fmt(Y(p.pts[i].second));
    }
    const char* fill = p.translation ? "#f0b860" : "#d7e3f4";
    os << "\" fill=\"" << fill
       << "\" stroke=\"#333333\" stroke-width=\"1\"><title>" << p.label
       << "</title></polygon>\n";
  }
  for (const auto& p : polys) {
    if (!p.base) continue;
    double cx = 0, cy = 0;
    for (auto [px, py] : p.pts) {
      cx += px;
      cy += py;
    }
    cx /= double(p.pts.size());
    cy /= double(p.pts.size());
    os << "<text x=\"" << fmt(X(cx)) << "\" y=\"" << fmt(Y(cy))
       << "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
          "fill=\"#000000\">&#964;</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace parahoric
