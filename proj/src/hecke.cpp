#include "parahoric/hecke.hpp"

#include "parahoric/stratify.hpp"

#include <mutex>
#include <unordered_map>

namespace parahoric {

HeckeElt HeckeElt::basis(const AffineElt& x) {
  HeckeElt h(x.datum);
  h.coeffs_[x] = LaurentPoly::one();
  return h;
}

HeckeElt HeckeElt::unit(const DatumPtr& d) { return basis(identity_elt(d)); }

LaurentPoly HeckeElt::coeff(const AffineElt& x) const {
  auto it = coeffs_.find(x);
  return it == coeffs_.end() ? LaurentPoly::zero() : it->second;
}

void HeckeElt::add(const AffineElt& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs_.emplace(x, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt h = *this;
  if (!h.datum_) h.datum_ = o.datum_;
  for (const auto& [x, c] : o.coeffs_) h.add(x, c);
  return h;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt h = *this;
  if (!h.datum_) h.datum_ = o.datum_;
  for (const auto& [x, c] : o.coeffs_) h.add(x, -c);
  return h;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& c) const {
  HeckeElt h(datum_);
  if (c.is_zero()) return h;
  for (const auto& [x, cc] : coeffs_) h.coeffs_[x] = cc * c;
  return h;
}

HeckeElt HeckeElt::mult_Ts(const AffineElt& s) const {
  HeckeElt out(datum_);
  LaurentPoly q = LaurentPoly::q_power(1);
  LaurentPoly qm1 = q - LaurentPoly::one();
  for (const auto& [x, c] : coeffs_) {
    AffineElt xs = multiply(x, s);
    if (length(xs) > length(x)) {
      out.add(xs, c);
    } else {
      out.add(x, c * qm1);
      out.add(xs, c * q);
    }
  }
  return out;
}

HeckeElt HeckeElt::mult_Ts_inverse(const AffineElt& s) const {
  HeckeElt out(datum_);
  LaurentPoly qinv = LaurentPoly::monomial(-2, 1);
  LaurentPoly one_minus_qinv = LaurentPoly::one() - qinv;
  for (const auto& [x, c] : coeffs_) {
    AffineElt xs = multiply(x, s);
    if (length(xs) < length(x)) {
      out.add(xs, c);
    } else {
      out.add(xs, c * qinv);
      out.add(x, -(c * one_minus_qinv));
    }
  }
  return out;
}

HeckeElt HeckeElt::mult_Tomega(const AffineElt& omega) const {
  HeckeElt out(datum_);
  for (const auto& [x, c] : coeffs_) out.add(multiply(x, omega), c);
  return out;
}

HeckeElt hecke_multiply(const HeckeElt& a, const HeckeElt& b) {
  if (!a.datum() || !b.datum() || !a.datum()->same_group(*b.datum()))
    throw std::invalid_argument("group tag mismatch");
  auto d = a.datum();
  auto gens = simple_reflections(d);
  HeckeElt acc(d);
  for (const auto& [y, c] : b.coeffs()) {
    OmegaDecomposition dec = omega_decompose(y);
    HeckeElt cur = a;
    for (int gi : dec.word) cur = cur.mult_Ts(gens[gi]);
    cur = cur.mult_Tomega(dec.omega);
    acc = acc + cur.scaled(c);
  }
  return acc;
}

HeckeElt t_inverse(const AffineElt& w) {
  auto d = w.datum;
  auto gens = simple_reflections(d);
  OmegaDecomposition dec = omega_decompose(w);
  // w = s_{i_1} ... s_{i_k} omega, so w^{-1}-side expansion:
  // T_w^{-1} = T_omega^{-1} T_{s_{i_k}}^{-1} ... T_{s_{i_1}}^{-1}.
  HeckeElt cur = HeckeElt::basis(invert(dec.omega));
  for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it)
    cur = cur.mult_Ts_inverse(gens[*it]);
  return cur;
}

namespace {

struct RCache {
  std::mutex mu;
  std::unordered_map<std::string, LaurentPoly> memo;
};

RCache& r_cache() {
  static RCache c;
  return c;
}

std::string pack_pair(const AffineElt& x, const AffineElt& y) {
  std::string s = x.datum->family_name() + std::to_string(x.datum->n) + ":";
  for (auto v : x.nu) s += std::to_string(v) + ",";
  for (auto v : x.wbar) s += std::to_string(v) + ",";
  s += ";";
  for (auto v : y.nu) s += std::to_string(v) + ",";
  for (auto v : y.wbar) s += std::to_string(v) + ",";
  return s;
}

LaurentPoly r_poly_impl(const AffineElt& x, const AffineElt& y,
                        const std::vector<AffineElt>& gens,
                        std::unordered_map<std::string, LaurentPoly>& memo) {
  if (x == y) return LaurentPoly::one();
  long long lx = length(x), ly = length(y);
  if (lx >= ly) return LaurentPoly::zero();
  if (ly == 0) return LaurentPoly::zero();
  std::string key = pack_pair(x, y);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  LaurentPoly result;
  for (const auto& s : gens) {
    AffineElt ys = multiply(y, s);
    if (length(ys) < ly) {
      AffineElt xs = multiply(x, s);
      if (length(xs) < lx) {
        result = r_poly_impl(xs, ys, gens, memo);
      } else {
        LaurentPoly q = LaurentPoly::q_power(1);
        result = (q - LaurentPoly::one()) * r_poly_impl(x, ys, gens, memo) +
                 q * r_poly_impl(xs, ys, gens, memo);
      }
      break;
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

LaurentPoly r_polynomial(const AffineElt& x, const AffineElt& y) {
  require_same_group(x, y);
  if (kottwitz_index(x) != kottwitz_index(y)) return LaurentPoly::zero();
  auto gens = simple_reflections(x.datum);
  auto& cache = r_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  return r_poly_impl(x, y, gens, cache.memo);
}

namespace {

// Strictly dominant integral coweight used to split lambda into a
// difference of dominant coweights.
Coweight dominant_regular(const GroupDatum& d) {
  Coweight delta(d.N, 0);
  if (d.family == Family::GL) {
    for (int i = 0; i < d.N; ++i) delta[i] = d.N - 1 - i;
  } else {
    for (int i = 0; i < d.n; ++i) {
      delta[i] = d.n - i;
      delta[d.N - 1 - i] = -(d.n - i);
    }
  }
  return delta;
}

HeckeElt theta_with_shift(const DatumPtr& d, const Coweight& lambda, long long scale) {
  Coweight delta = dominant_regular(*d);
  Coweight lam2(d->N), lam1(d->N);
  for (int i = 0; i < d->N; ++i) {
    lam2[i] = scale * delta[i];
    lam1[i] = lambda[i] + lam2[i];
  }
  if (!is_dominant(*d, to_rat_vec(lam1)) || !is_dominant(*d, to_rat_vec(lam2)))
    throw std::logic_error("theta: decomposition not dominant");
  AffineElt t1 = translation_elt(d, lam1);
  AffineElt t2 = translation_elt(d, lam2);
  long long l1 = length(t1), l2 = length(t2);
  HeckeElt h = hecke_multiply(HeckeElt::basis(t1), t_inverse(t2));
  return h.scaled(LaurentPoly::monomial(int(-l1 + l2), 1));
}

long long dominance_gap(const GroupDatum& d, const Coweight& lambda) {
  long long worst = 0;
  for (int si : d.simple_indices)
    worst = std::max(worst, -pairing(d.positive_roots[si].root, lambda));
  return worst;
}

}  // namespace

HeckeElt theta(const DatumPtr& d, const Coweight& lambda) {
  require_coweight(*d, lambda);
  long long scale = std::max<long long>(1, dominance_gap(*d, lambda));
  HeckeElt h = theta_with_shift(d, lambda, scale);
#ifndef NDEBUG
  if (h != theta_with_shift(d, lambda, scale + 1))
    throw std::logic_error("theta: decomposition dependence detected");
#endif
  return h;
}

HeckeElt bernstein_z(const DatumPtr& d, const Coweight& mu) {
  if (!is_minuscule(*d, mu))
    throw std::invalid_argument("bernstein_z: mu must be minuscule");
  HeckeElt acc(d);
  for (const auto& lam : weyl_orbit(*d, mu)) acc = acc + theta(d, lam);
  return acc;
}

HeckeElt spherical_idempotent_numerator(const DatumPtr& d) {
  HeckeElt acc(d);
  for (const auto& w : finite_weyl_elements(*d))
    acc.add(finite_elt(d, w), LaurentPoly::one());
  return acc;
}

bool commutes_with_generators(const HeckeElt& h) {
  auto d = h.datum();
  for (const auto& s : simple_reflections(d)) {
    HeckeElt ts = HeckeElt::basis(s);
    if (hecke_multiply(ts, h) != hecke_multiply(h, ts)) return false;
  }
  for (int e : {1, -1}) {
    AffineElt om = power(omega_generator(d), e);
    HeckeElt to = HeckeElt::basis(om);
    if (hecke_multiply(to, h) != hecke_multiply(h, to)) return false;
  }
  return true;
}

HeckeElt spherical_image(const HeckeElt& z) {
  if (!commutes_with_generators(z))
    throw std::invalid_argument("spherical_image: input is not central");
  return hecke_multiply(z, spherical_idempotent_numerator(z.datum()));
}

std::map<AffineElt, LaurentPoly> trace_table(const DatumPtr& d, const Coweight& mu) {
  if (!is_minuscule(*d, mu))
    throw std::invalid_argument("trace_table: mu must be minuscule");
  AffineElt tmu = translation_elt(d, dominant_representative(*d, mu));
  long long ltmu = length(tmu);
  std::map<AffineElt, LaurentPoly> out;
  for (const auto& w : adm_set(d, mu)) {
    AffineElt tlam = translation_elt(d, w.nu);
    LaurentPoly r = r_polynomial(w, tlam);
    long long sign = (ltmu + length(w)) % 2 == 0 ? 1 : -1;
    out.emplace(w, r.scaled(sign));
  }
  return out;
}

std::map<AffineElt, long long> test_function(const DatumPtr& d, const Coweight& mu,
                                             long long p, int r, long long dim) {
  if (!is_minuscule(*d, mu))
    throw std::invalid_argument("test_function: mu must be minuscule");
  if (r < 1) throw std::invalid_argument("test_function: r must be >= 1");
  if (p < 2) throw std::invalid_argument("test_function: p must be prime");
  for (long long f = 2; f * f <= p; ++f)
    if (p % f == 0) throw std::invalid_argument("test_function: p must be prime");
  AffineElt tmu = translation_elt(d, dominant_representative(*d, mu));
  if (dim != length(tmu))
    throw std::invalid_argument("test_function: dim must equal l(t_mu)");
  HeckeElt z = bernstein_z(d, mu);
  std::map<AffineElt, long long> out;
  for (const auto& [x, c] : z.coeffs())
    out.emplace(x, c.shifted(int(dim)).eval_v_sqrt_q(p, r));
  return out;
}

}  // namespace parahoric
