#include "parahoric/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace parahoric {

Perm perm_identity(int N) {
  Perm p(N);
  for (int i = 0; i < N; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& u, const Perm& v) {
  Perm p(v.size());
  for (size_t i = 0; i < v.size(); ++i) p[i] = u[v[i]];
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = int(i);
  return inv;
}

int perm_order(const Perm& p) {
  int N = int(p.size());
  std::vector<bool> seen(N, false);
  long long ord = 1;
  for (int i = 0; i < N; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    ord = std::lcm(ord, (long long)len);
  }
  return int(ord);
}

namespace {

std::vector<long long> unit(int N, int i, long long c = 1) {
  std::vector<long long> v(N, 0);
  v[i] = c;
  return v;
}

Perm transpositions(int N, std::vector<std::pair<int, int>> swaps) {
  Perm p = perm_identity(N);
  for (auto [a, b] : swaps) std::swap(p[a], p[b]);
  return p;
}

void build_gl(GroupDatum& d) {
  int n = d.n;
  d.N = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RootEntry e;
      e.root = unit(n, i);
      e.root[j] -= 1;
      e.coroot = e.root;
      e.reflection = transpositions(n, {{i, j}});
      d.positive_roots.push_back(std::move(e));
      if (j == i + 1) d.simple_indices.push_back(int(d.positive_roots.size()) - 1);
      if (i == 0 && j == n - 1) d.highest_root_index = int(d.positive_roots.size()) - 1;
    }
  }
  for (int i = 0; i + 1 < n; ++i)
    d.weyl_generators.push_back(transpositions(n, {{i, i + 1}}));

  // Interior point of {x_n - 1 < x_1 < ... < x_n}.
  d.alcove_interior.resize(n);
  for (int i = 0; i < n; ++i) d.alcove_interior[i] = Rat(2 * (i + 1) - 1, 2 * n);

  // Vertex omitting the wall x_j = x_{j+1}: ((-1)^j, 0^{n-j}); origin for
  // the affine wall.
  for (int j = 0; j < n; ++j) {
    RatVec v(n, Rat(0));
    for (int k = 0; k < j; ++k) v[k] = Rat(-1);
    d.alcove_vertices.push_back(std::move(v));
  }

  // tau_1 = t_{(-1,0^{n-1})} (1 2 ... n), the cycle sending coordinate
  // slot i to slot i+1.
  d.tau1_nu = unit(n, 0, -1);
  Perm cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  d.tau1_w = cyc;
}

void build_gsp(GroupDatum& d) {
  int n = d.n;
  int N = 2 * n;
  d.N = N;
  auto partner = [N](int i) { return N - 1 - i; };

  // Short roots x_i - x_j, then sums x_i + x_j - c, then long 2x_i - c,
  // ordered so that the simple roots are x_i - x_{i+1} and 2x_n - c.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RootEntry e;
      e.root = unit(N, i);
      e.root[j] -= 1;
      e.coroot = unit(N, i);
      e.coroot[j] -= 1;
      e.coroot[partner(j)] += 1;
      e.coroot[partner(i)] -= 1;
      e.reflection = transpositions(N, {{i, j}, {partner(j), partner(i)}});
      d.positive_roots.push_back(std::move(e));
      if (j == i + 1) d.simple_indices.push_back(int(d.positive_roots.size()) - 1);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RootEntry e;
      e.root = unit(N, i);
      e.root[partner(j)] -= 1;
      e.coroot = unit(N, i);
      e.coroot[j] += 1;
      e.coroot[partner(i)] -= 1;
      e.coroot[partner(j)] -= 1;
      e.reflection = transpositions(N, {{i, partner(j)}, {j, partner(i)}});
      d.positive_roots.push_back(std::move(e));
    }
  }
  for (int i = 0; i < n; ++i) {
    RootEntry e;
    e.root = unit(N, i);
    e.root[partner(i)] -= 1;
    e.coroot = e.root;
    e.reflection = transpositions(N, {{i, partner(i)}});
    d.positive_roots.push_back(std::move(e));
    if (i == n - 1) d.simple_indices.push_back(int(d.positive_roots.size()) - 1);
    if (i == 0) d.highest_root_index = int(d.positive_roots.size()) - 1;
  }

  for (int i = 0; i + 1 < n; ++i)
    d.weyl_generators.push_back(
        transpositions(N, {{i, i + 1}, {partner(i + 1), partner(i)}}));
  d.weyl_generators.push_back(transpositions(N, {{n - 1, n}}));

  // Interior point: x_i = (2(i+1-n)-1)/(2(2n+1)), c = 0.
  d.alcove_interior.assign(N, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat x(2 * (i + 1 - n) - 1, 2 * (2 * n + 1));
    d.alcove_interior[i] = x;
    d.alcove_interior[partner(i)] = -x;
  }

  // Vertices: origin; ((-1/2)^j, 0 ...) with c = 0 for j = 1..n-1; and
  // (0^n, 1^n) with c = 1.
  d.alcove_vertices.push_back(RatVec(N, Rat(0)));
  for (int j = 1; j < n; ++j) {
    RatVec v(N, Rat(0));
    for (int k = 0; k < j; ++k) {
      v[k] = Rat(-1, 2);
      v[partner(k)] = Rat(1, 2);
    }
    d.alcove_vertices.push_back(std::move(v));
  }
  {
    RatVec v(N, Rat(0));
    for (int k = n; k < N; ++k) v[k] = Rat(1);
    d.alcove_vertices.push_back(std::move(v));
  }

  // tau_1 = t_{((-1)^n, 0^n)} (1 2 ... 2n)^n, i.e. slot shift by n.
  d.tau1_nu.assign(N, 0);
  for (int i = 0; i < n; ++i) d.tau1_nu[i] = -1;
  Perm w(N);
  for (int i = 0; i < N; ++i) w[i] = (i + n) % N;
  d.tau1_w = w;
}

}  // namespace

DatumPtr build_group_datum(Family family, int n) {
  if (family == Family::GL && n < 2)
    throw std::invalid_argument("GL requires n >= 2");
  if (family == Family::GSp && n < 1)
    throw std::invalid_argument("GSp requires n >= 1");
  auto d = std::make_shared<GroupDatum>();
  d->family = family;
  d->n = n;
  if (family == Family::GL)
    build_gl(*d);
  else
    build_gsp(*d);

  d->rho.assign(d->N, Rat(0));
  for (const auto& e : d->positive_roots)
    for (int i = 0; i < d->N; ++i) d->rho[i] += Rat(e.root[i], 2);

  for (int si : d->simple_indices) {
    const auto& e = d->positive_roots[si];
    if (pairing(e.root, e.coroot) != 2)
      throw std::logic_error("simple root/coroot pairing != 2");
  }
  return d;
}

long long pairing(const std::vector<long long>& root, const Coweight& lam) {
  if (root.size() != lam.size()) throw std::invalid_argument("pairing: dimension mismatch");
  long long s = 0;
  for (size_t i = 0; i < root.size(); ++i) s += root[i] * lam[i];
  return s;
}

Rat pairing_rat(const std::vector<long long>& root, const RatVec& v) {
  if (root.size() != v.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Rat s(0);
  for (size_t i = 0; i < root.size(); ++i) s += Rat(root[i]) * v[i];
  return s;
}

bool in_coweight_lattice(const GroupDatum& d, const Coweight& lam) {
  if (int(lam.size()) != d.N) return false;
  if (d.family == Family::GSp) {
    long long c = lam[0] + lam[d.N - 1];
    for (int i = 0; i < d.n; ++i)
      if (lam[i] + lam[d.N - 1 - i] != c) return false;
  }
  return true;
}

void require_coweight(const GroupDatum& d, const Coweight& lam) {
  if (!in_coweight_lattice(d, lam))
    throw std::invalid_argument("coweight not in the lattice of the group datum");
}

long long central_coordinate(const GroupDatum& d, const Coweight& lam) {
  if (d.family == Family::GL) {
    long long s = 0;
    for (auto x : lam) s += x;
    return s;
  }
  return lam[0] + lam[d.N - 1];
}

Rat central_coordinate_rat(const GroupDatum& d, const RatVec& v) {
  if (d.family == Family::GL) {
    Rat s(0);
    for (const auto& x : v) s += x;
    return s;
  }
  return v[0] + v[d.N - 1];
}

std::vector<Coweight> weyl_orbit(const GroupDatum& d, const Coweight& lam) {
  require_coweight(d, lam);
  std::set<Coweight> orbit{lam};
  std::vector<Coweight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Coweight> next;
    for (const auto& v : frontier) {
      for (const auto& g : d.weyl_generators) {
        auto w = perm_apply(g, v);
        if (orbit.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<Perm> finite_weyl_elements(const GroupDatum& d) {
  std::set<Perm> all{perm_identity(d.N)};
  std::vector<Perm> frontier{perm_identity(d.N)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& w : frontier) {
      for (const auto& g : d.weyl_generators) {
        auto u = perm_compose(g, w);
        if (all.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

bool is_dominant(const GroupDatum& d, const RatVec& v) {
  for (int si : d.simple_indices)
    if (pairing_rat(d.positive_roots[si].root, v) < Rat(0)) return false;
  return true;
}

RatVec dominant_representative(const GroupDatum& d, const RatVec& v) {
  if (d.family == Family::GL) {
    RatVec out = v;
    std::sort(out.begin(), out.end(), std::greater<Rat>());
    return out;
  }
  int n = d.n, N = d.N;
  Rat c = v[0] + v[N - 1];
  RatVec mag(n);
  for (int i = 0; i < n; ++i) {
    Rat di = v[i] - c / 2;
    mag[i] = di < Rat(0) ? -di : di;
  }
  std::sort(mag.begin(), mag.end(), std::greater<Rat>());
  RatVec out(N);
  for (int i = 0; i < n; ++i) {
    out[i] = c / 2 + mag[i];
    out[N - 1 - i] = c / 2 - mag[i];
  }
  return out;
}

Coweight dominant_representative(const GroupDatum& d, const Coweight& lam) {
  RatVec r = dominant_representative(d, to_rat_vec(lam));
  Coweight out(r.size());
  for (size_t i = 0; i < r.size(); ++i) {
    if (!is_integer(r[i])) throw std::logic_error("dominant rep of integral coweight not integral");
    out[i] = r[i].numerator();
  }
  return out;
}

bool is_minuscule(const GroupDatum& d, const Coweight& mu) {
  require_coweight(d, mu);
  for (const auto& e : d.positive_roots) {
    long long p = pairing(e.root, mu);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

bool in_convex_hull(const GroupDatum& d, const RatVec& v, const Coweight& mu) {
  if (central_coordinate_rat(d, v) != Rat(central_coordinate(d, mu))) return false;
  if (d.family == Family::GSp) {
    Rat c = v[0] + v[d.N - 1];
    for (int i = 0; i < d.n; ++i)
      if (v[i] + v[d.N - 1 - i] != c) return false;
  }
  RatVec vd = dominant_representative(d, v);
  RatVec md = dominant_representative(d, to_rat_vec(mu));
  // mu_dom - v_dom must be a nonnegative combination of simple coroots:
  // partial sums of the difference over the leading block are >= 0.
  int limit = d.family == Family::GL ? d.N - 1 : d.n;
  Rat s(0);
  for (int k = 0; k < limit; ++k) {
    s += md[k] - vd[k];
    if (s < Rat(0)) return false;
  }
  return true;
}

std::vector<RatVec> base_alcove_vertices(const GroupDatum& d) {
  return d.alcove_vertices;
}

}  // namespace parahoric
