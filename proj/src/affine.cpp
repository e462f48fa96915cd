#include "parahoric/affine.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace parahoric {

bool AffineElt::is_translation() const {
  for (size_t i = 0; i < wbar.size(); ++i)
    if (wbar[i] != int(i)) return false;
  return true;
}

bool AffineElt::is_identity() const {
  if (!is_translation()) return false;
  for (auto x : nu)
    if (x != 0) return false;
  return true;
}

RatVec AffineElt::apply(const RatVec& v) const {
  RatVec out = perm_apply(wbar, v);
  for (size_t i = 0; i < out.size(); ++i) out[i] += Rat(nu[i]);
  return out;
}

AffineElt identity_elt(const DatumPtr& d) {
  return AffineElt{Coweight(d->N, 0), perm_identity(d->N), d};
}

AffineElt translation_elt(const DatumPtr& d, const Coweight& nu) {
  require_coweight(*d, nu);
  return AffineElt{nu, perm_identity(d->N), d};
}

AffineElt finite_elt(const DatumPtr& d, const Perm& w) {
  return AffineElt{Coweight(d->N, 0), w, d};
}

AffineElt make_elt(const DatumPtr& d, const Coweight& nu, const Perm& w) {
  require_coweight(*d, nu);
  return AffineElt{nu, w, d};
}

void require_same_group(const AffineElt& x, const AffineElt& y) {
  if (!x.datum || !y.datum || !x.datum->same_group(*y.datum))
    throw std::invalid_argument("group tag mismatch");
}

AffineElt multiply(const AffineElt& x, const AffineElt& y) {
  require_same_group(x, y);
  Coweight nu = perm_apply(x.wbar, y.nu);
  for (size_t i = 0; i < nu.size(); ++i) nu[i] += x.nu[i];
  return AffineElt{std::move(nu), perm_compose(x.wbar, y.wbar), x.datum};
}

AffineElt invert(const AffineElt& x) {
  Perm wi = perm_inverse(x.wbar);
  Coweight nu = perm_apply(wi, x.nu);
  for (auto& c : nu) c = -c;
  return AffineElt{std::move(nu), std::move(wi), x.datum};
}

AffineElt power(const AffineElt& x, long long k) {
  AffineElt base = k < 0 ? invert(x) : x;
  long long m = k < 0 ? -k : k;
  AffineElt acc = identity_elt(x.datum);
  for (long long i = 0; i < m; ++i) acc = multiply(acc, base);
  return acc;
}

long long length(const AffineElt& x) {
  const GroupDatum& d = *x.datum;
  RatVec img = x.apply(d.alcove_interior);
  long long len = 0;
  for (const auto& e : d.positive_roots) {
    Rat a = pairing_rat(e.root, d.alcove_interior);
    Rat b = pairing_rat(e.root, img);
    len += integers_strictly_between(a, b);
  }
  return len;
}

long long kottwitz_index(const AffineElt& x) {
  return central_coordinate(*x.datum, x.nu);
}

std::vector<AffineElt> simple_reflections(const DatumPtr& d) {
  std::vector<AffineElt> out;
  for (int si : d->simple_indices)
    out.push_back(finite_elt(d, d->positive_roots[si].reflection));
  const auto& theta = d->positive_roots[d->highest_root_index];
  Coweight nu(theta.coroot);
  for (auto& c : nu) c = -c;
  out.push_back(make_elt(d, nu, theta.reflection));
  return out;
}

AffineElt omega_generator(const DatumPtr& d) {
  return AffineElt{d->tau1_nu, d->tau1_w, d};
}

AffineElt tau_element(const DatumPtr& d, const Coweight& mu) {
  require_coweight(*d, mu);
  long long kappa = central_coordinate(*d, mu);
  // kappa(tau_1) = -1 in both families.
  return power(omega_generator(d), -kappa);
}

OmegaDecomposition omega_decompose(const AffineElt& x) {
  auto d = x.datum;
  AffineElt omega = power(omega_generator(d), -kottwitz_index(x));
  AffineElt rest = multiply(x, invert(omega));
  auto gens = simple_reflections(d);
  std::vector<int> word;
  long long len = length(rest);
  while (len > 0) {
    bool moved = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      AffineElt next = multiply(rest, gens[i]);
      long long ln = length(next);
      if (ln < len) {
        word.push_back(int(i));
        rest = std::move(next);
        len = ln;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("no descent found for positive-length element");
  }
  if (!rest.is_identity())
    throw std::logic_error("omega_decompose: residue after word extraction is not trivial");
  std::reverse(word.begin(), word.end());
  return OmegaDecomposition{std::move(word), std::move(omega)};
}

namespace {

std::string pack(const AffineElt& x) {
  std::string s;
  s.reserve(x.nu.size() * 4);
  for (auto c : x.nu) {
    s += std::to_string(c);
    s += ',';
  }
  s += '|';
  for (auto c : x.wbar) {
    s += std::to_string(c);
    s += ',';
  }
  return s;
}

struct BruhatCache {
  std::mutex mu;
  std::unordered_map<std::string, bool> memo;
};

BruhatCache& bruhat_cache() {
  static BruhatCache cache;
  return cache;
}

bool leq_impl(const AffineElt& x, const AffineElt& y,
              const std::vector<AffineElt>& gens,
              std::unordered_map<std::string, bool>& memo) {
  if (x == y) return true;
  long long lx = length(x), ly = length(y);
  if (lx > ly) return false;
  if (ly == 0) return x == y;
  std::string key = x.datum->family_name() + std::to_string(x.datum->n) + ":" +
                    pack(x) + ";" + pack(y);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool result = false;
  for (const auto& s : gens) {
    AffineElt ys = multiply(y, s);
    if (length(ys) < ly) {
      AffineElt xs = multiply(x, s);
      if (length(xs) < lx)
        result = leq_impl(xs, ys, gens, memo);
      else
        result = leq_impl(x, ys, gens, memo);
      break;
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool bruhat_leq(const AffineElt& x, const AffineElt& y) {
  require_same_group(x, y);
  if (kottwitz_index(x) != kottwitz_index(y)) return false;
  auto gens = simple_reflections(x.datum);
  auto& cache = bruhat_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  return leq_impl(x, y, gens, cache.memo);
}

std::string to_text(const AffineElt& x) {
  std::ostringstream os;
  os << "t[";
  for (size_t i = 0; i < x.nu.size(); ++i) {
    if (i) os << ",";
    os << x.nu[i];
  }
  os << "]*w[";
  for (size_t i = 0; i < x.wbar.size(); ++i) {
    if (i) os << ",";
    os << x.wbar[i] + 1;
  }
  os << "]";
  return os.str();
}

AffineElt parse_element(const DatumPtr& d, const std::string& text) {
  auto fail = [&]() { throw std::invalid_argument("cannot parse element: " + text); };
  size_t t0 = text.find("t[");
  size_t t1 = text.find("]*w[");
  size_t t2 = text.rfind(']');
  if (t0 != 0 || t1 == std::string::npos || t2 != text.size() - 1 || t2 <= t1) fail();
  auto parse_list = [&](const std::string& body) {
    std::vector<long long> out;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stoll(item));
    return out;
  };
  auto nus = parse_list(text.substr(2, t1 - 2));
  auto ws = parse_list(text.substr(t1 + 4, t2 - (t1 + 4)));
  if (int(nus.size()) != d->N || int(ws.size()) != d->N) fail();
  Perm w(d->N);
  std::vector<bool> seen(d->N, false);
  for (int i = 0; i < d->N; ++i) {
    long long v = ws[i] - 1;
    if (v < 0 || v >= d->N || seen[v]) fail();
    seen[v] = true;
    w[i] = int(v);
  }
  return make_elt(d, Coweight(nus.begin(), nus.end()), w);
}

}  // namespace parahoric
