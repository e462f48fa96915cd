#include "parahoric/latmodel.hpp"

#include "parahoric/stratify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace parahoric {

GFq::GFq(int q_) : q(q_) {
  if (q != 2 && q != 3 && q != 4)
    throw std::invalid_argument("GFq: q must be one of 2, 3, 4");
  if (q == 4) {
    // F_4 = F_2[x]/(x^2+x+1), elements 0, 1, x = 2, x+1 = 3.
    for (int a = 0; a < 4; ++a) {
      neg_[a] = a;
      for (int b = 0; b < 4; ++b) add_[a][b] = a ^ b;
    }
    auto mulf4 = [](int a, int b) {
      int r = 0;
      // bit 0 = 1-part, bit 1 = x-part; x^2 = x + 1
      int a0 = a & 1, a1 = (a >> 1) & 1, b0 = b & 1, b1 = (b >> 1) & 1;
      int c0 = (a0 & b0) ^ (a1 & b1);
      int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
      r = c0 | (c1 << 1);
      return r;
    };
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) mul_[a][b] = mulf4(a, b);
  } else {
    for (int a = 0; a < q; ++a) {
      neg_[a] = (q - a) % q;
      for (int b = 0; b < q; ++b) {
        add_[a][b] = (a + b) % q;
        mul_[a][b] = (a * b) % q;
      }
    }
  }
}

int GFq::inv(int a) const {
  for (int b = 1; b < q; ++b)
    if (mul(a, b) == 1) return b;
  throw std::invalid_argument("GFq: inverse of zero");
}

namespace {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

// Reduce v against rows in RREF; returns the residue.
Vec reduce_against(const GFq& F, const Mat& rref, Vec v) {
  for (const auto& row : rref) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    if (v[p] != 0) {
      int c = F.mul(v[p], F.inv(row[p]));
      for (size_t k = 0; k < v.size(); ++k) v[k] = F.sub(v[k], F.mul(c, row[k]));
    }
  }
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

Mat rref_of(const GFq& F, Mat rows) {
  Mat out;
  for (auto& r : rows) {
    Vec v = reduce_against(F, out, r);
    if (is_zero_vec(v)) continue;
    size_t p = 0;
    while (v[p] == 0) ++p;
    int c = F.inv(v[p]);
    for (auto& x : v) x = F.mul(x, c);
    for (auto& prev : out) {
      if (prev[p] != 0) {
        int cc = prev[p];
        for (size_t k = 0; k < prev.size(); ++k)
          prev[k] = F.sub(prev[k], F.mul(cc, v[k]));
      }
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
    size_t pa = 0, pb = 0;
    while (pa < a.size() && a[pa] == 0) ++pa;
    while (pb < b.size() && b[pb] == 0) ++pb;
    return pa < pb;
  });
  return out;
}

bool contains_vec(const GFq& F, const Mat& rref, const Vec& v) {
  return is_zero_vec(reduce_against(F, rref, v));
}

// All k-dimensional subspaces of F_q^N, as RREF row bases.
void enumerate_subspaces_rec(const GFq& F, int N, int k, int start, Vec& pivots,
                             std::vector<Mat>& out) {
  if (int(pivots.size()) == k) {
    // Fill in free entries.
    std::vector<std::pair<int, int>> free_slots;  // (row, col)
    std::vector<bool> is_pivot(N, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < N; ++c)
        if (!is_pivot[c]) free_slots.emplace_back(r, c);
    Mat base(k, Vec(N, 0));
    for (int r = 0; r < k; ++r) base[r][pivots[r]] = 1;
    size_t total = 1;
    for (size_t i = 0; i < free_slots.size(); ++i) total *= F.q;
    for (size_t code = 0; code < total; ++code) {
      Mat m = base;
      size_t rem = code;
      for (auto [r, c] : free_slots) {
        m[r][c] = int(rem % F.q);
        rem /= F.q;
      }
      out.push_back(std::move(m));
    }
    return;
  }
  for (int c = start; c < N; ++c) {
    pivots.push_back(c);
    enumerate_subspaces_rec(F, N, k, c + 1, pivots, out);
    pivots.pop_back();
  }
}

std::vector<Mat> enumerate_subspaces(const GFq& F, int N, int k) {
  std::vector<Mat> out;
  if (k == 0) {
    out.push_back(Mat{});
    return out;
  }
  Vec pivots;
  enumerate_subspaces_rec(F, N, k, 0, pivots, out);
  return out;
}

// Shift map of the standard chain: e_j -> e_{j-1}, e_0 -> 0.
Vec shift_vec(const Vec& v) {
  Vec out(v.size(), 0);
  for (size_t j = 1; j < v.size(); ++j) out[j - 1] = v[j];
  return out;
}

bool shift_maps_into(const GFq& F, const Mat& from, const Mat& into) {
  for (const auto& r : from)
    if (!contains_vec(F, into, shift_vec(r))) return false;
  return true;
}

// The alternating form of GSp_2n: (x, y) = sum_{i<n} x_i y_{2n-1-i}
// - sum_{i>=n} x_i y_{2n-1-i}, as a matrix over F_q.
Mat gsp_form_level0(const GFq& F, int n) {
  int N = 2 * n;
  Mat J(N, Vec(N, 0));
  for (int i = 0; i < n; ++i) J[i][N - 1 - i] = 1;
  for (int i = n; i < N; ++i) J[i][N - 1 - i] = F.neg(1);
  return J;
}

// Residue pairing on V_n / tV_n in the basis b^{(n)}_j.
Mat gsp_form_leveln(const GFq& F, int n) {
  int N = 2 * n;
  Mat J0 = gsp_form_level0(F, n);
  Mat J(N, Vec(N, 0));
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      if (j < n && k >= n)
        J[j][k] = J0[j + n][k - n];
      else if (j >= n && k < n)
        J[j][k] = J0[j - n][k + n];
    }
  return J;
}

int form_value(const GFq& F, const Mat& J, const Vec& x, const Vec& y) {
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    int row = 0;
    for (size_t j = 0; j < y.size(); ++j) row = F.add(row, F.mul(J[i][j], y[j]));
    s = F.add(s, F.mul(x[i], row));
  }
  return s;
}

bool is_isotropic(const GFq& F, const Mat& J, const Mat& rows) {
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = a; b < rows.size(); ++b)
      if (form_value(F, J, rows[a], rows[b]) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Relative position: reduction of a chain matrix over F_q[t] to the
// monomial-permutation normal form, with column operations from the
// right Iwahori and row operations from the left Iwahori.

constexpr int kDeg = 8;  // work modulo t^kDeg

struct PolyMat {
  int N = 0;
  const GFq* F = nullptr;
  // entry(i, j) = coefficient array of t^0..t^{kDeg-1}
  std::vector<std::array<int, kDeg>> data;

  PolyMat(int N_, const GFq& F_) : N(N_), F(&F_), data(N_ * N_) {
    for (auto& e : data) e.fill(0);
  }
  std::array<int, kDeg>& at(int i, int j) { return data[i * N + j]; }
  const std::array<int, kDeg>& at(int i, int j) const { return data[i * N + j]; }

  int valuation(int i, int j) const {
    const auto& e = at(i, j);
    for (int k = 0; k < kDeg; ++k)
      if (e[k] != 0) return k;
    return kDeg;
  }
  // row_k += c * t^e * row_i
  void row_op(int k, int i, int c, int e) {
    for (int j = 0; j < N; ++j) {
      auto& dst = at(k, j);
      const auto& src = at(i, j);
      for (int a = 0; a + e < kDeg; ++a)
        dst[a + e] = F->add(dst[a + e], F->mul(c, src[a]));
    }
  }
  // col_l += c * t^e * col_j
  void col_op(int l, int j, int c, int e) {
    for (int i = 0; i < N; ++i) {
      auto& dst = at(i, l);
      const auto& src = at(i, j);
      for (int a = 0; a + e < kDeg; ++a)
        dst[a + e] = F->add(dst[a + e], F->mul(c, src[a]));
    }
  }
};

// Representation of L_i / tV_0 inside M = t^{-1}V_0 / tV_0:
// coordinates 0..N-1 give the e_j part, N..2N-1 the t^{-1}e_j part.
struct ChainInM {
  int N = 0;
  std::vector<Mat> levels;  // RREF bases of L_0 .. L_N
};

Vec lift_to_M(int N, int level, const Vec& u) {
  // b^{(level)}_j = e_{j+level} if j + level < N, else t^{-1}e_{j+level-N}.
  Vec out(2 * N, 0);
  for (int j = 0; j < N; ++j) {
    if (u[j] == 0) continue;
    int idx = j + level;
    if (idx < N)
      out[idx] = u[j];
    else
      out[N + idx - N] = u[j];
  }
  return out;
}

Mat level_subspace_in_M(const GFq& F, int N, int level, const Mat& U) {
  Mat rows;
  for (const auto& u : U) rows.push_back(lift_to_M(N, level, u));
  for (int j = 0; j < level; ++j) {
    Vec e(2 * N, 0);
    e[j] = 1;
    rows.push_back(std::move(e));
  }
  return rref_of(F, rows);
}

Mat top_level_in_M(const GFq& F, int N, const Mat& U0) {
  // t^{-1} L_0 = V_0 + t^{-1} (lifts of U_0)
  Mat rows;
  for (int j = 0; j < N; ++j) {
    Vec e(2 * N, 0);
    e[j] = 1;
    rows.push_back(std::move(e));
  }
  for (const auto& u : U0) {
    Vec v(2 * N, 0);
    for (int j = 0; j < N; ++j) v[N + j] = u[j];
    rows.push_back(std::move(v));
  }
  return rref_of(F, rows);
}

// Lattice dual inside M with respect to the GSp form: conditions
// B2(x, y) = B1(x, y) = 0 for all y in L, where for x = (a, a') and
// y = (b, b'), (x, y) = a J b + t^{-1}(a' J b + a J b') + t^{-2} a' J b'.
Mat dual_in_M(const GFq& F, int N, const Mat& J, const Mat& L) {
  std::vector<Vec> conditions;  // linear functionals on (a, a')
  for (const auto& y : L) {
    Vec b(y.begin(), y.begin() + N), bp(y.begin() + N, y.end());
    Vec jb(N, 0), jbp(N, 0);
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        jb[i] = F.add(jb[i], F.mul(J[i][k], b[k]));
        jbp[i] = F.add(jbp[i], F.mul(J[i][k], bp[k]));
      }
    // B2: a' J b' = 0
    Vec c2(2 * N, 0);
    for (int i = 0; i < N; ++i) c2[N + i] = jbp[i];
    conditions.push_back(std::move(c2));
    // B1: a' J b + a J b' = 0
    Vec c1(2 * N, 0);
    for (int i = 0; i < N; ++i) {
      c1[N + i] = jb[i];
      c1[i] = jbp[i];
    }
    conditions.push_back(std::move(c1));
  }
  Mat sys = rref_of(F, conditions);
  // Kernel basis of the system.
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(2 * N, false);
  for (const auto& row : sys) {
    int p = 0;
    while (row[p] == 0) ++p;
    pivot_col.push_back(p);
    is_pivot[p] = true;
  }
  Mat kernel;
  for (int freec = 0; freec < 2 * N; ++freec) {
    if (is_pivot[freec]) continue;
    Vec v(2 * N, 0);
    v[freec] = 1;
    for (size_t r = 0; r < sys.size(); ++r)
      v[pivot_col[r]] = F.neg(sys[r][freec]);
    kernel.push_back(std::move(v));
  }
  return rref_of(F, kernel);
}

ChainInM chain_in_M(const GFq& F, const DatumPtr& d, const ChainPoint& p) {
  ChainInM chain;
  int N = d->N;
  chain.N = N;
  chain.levels.resize(N + 1);
  if (p.family == Family::GL) {
    for (int i = 0; i < N; ++i)
      chain.levels[i] = level_subspace_in_M(F, N, i, p.layers[i]);
  } else {
    int n = d->n;
    for (int i = 0; i <= n; ++i)
      chain.levels[i] = level_subspace_in_M(F, N, i, p.layers[i]);
    Mat J = gsp_form_level0(F, n);
    for (int k = 1; k < n; ++k)
      chain.levels[n + k] = dual_in_M(F, N, J, chain.levels[n - k]);
  }
  chain.levels[N] = top_level_in_M(F, N, p.layers[0]);
  for (int i = 0; i <= N; ++i) {
    int corank = p.family == Family::GL ? p.d : d->n;
    if (int(chain.levels[i].size()) != N - corank + i)
      throw std::logic_error("chain level has unexpected dimension");
  }
  return chain;
}

AffineElt decode_monomial(const DatumPtr& d, const PolyMat& g) {
  int N = g.N;
  Perm pi(N, -1);
  Coweight nu(N, 0);
  std::vector<bool> row_used(N, false);
  for (int j = 0; j < N; ++j) {
    int found = -1;
    for (int i = 0; i < N; ++i) {
      if (g.valuation(i, j) < kDeg) {
        if (found != -1)
          throw std::logic_error("rel_position: normal form is not monomial");
        found = i;
      }
    }
    if (found == -1 || row_used[found])
      throw std::logic_error("rel_position: normal form is not monomial");
    row_used[found] = true;
    pi[j] = found;
    nu[found] = g.valuation(found, j);
  }
  if (d->family == Family::GSp) {
    if (!in_coweight_lattice(*d, nu))
      throw std::logic_error("rel_position: result not in the GSp coweight lattice");
    for (int i = 0; i < N; ++i)
      if (pi[N - 1 - i] != N - 1 - pi[i])
        throw std::logic_error("rel_position: finite part not symplectic");
  }
  return make_elt(d, nu, pi);
}

void reduce_to_monomial(PolyMat& g) {
  int N = g.N;
  const GFq& F = *g.F;
  std::vector<bool> row_active(N, true), col_active(N, true);
  for (int step = 0; step < N; ++step) {
    int best_val = kDeg, pi = -1, pj = -1;
    for (int i = 0; i < N; ++i) {
      if (!row_active[i]) continue;
      for (int j = 0; j < N; ++j) {
        if (!col_active[j]) continue;
        int v = g.valuation(i, j);
        if (v < best_val || (v == best_val && (i > pi || (i == pi && j < pj)))) {
          best_val = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (best_val >= kDeg)
      throw std::logic_error("rel_position: chain matrix is singular modulo t^deg");
    // Clear column pj with row operations sourced at the pivot row.
    for (int k = 0; k < N; ++k) {
      if (k == pi || !row_active[k]) continue;
      int guard = 0;
      while (g.valuation(k, pj) < kDeg) {
        if (++guard > 4 * kDeg)
          throw std::logic_error("rel_position: column clearing does not terminate");
        int vk = g.valuation(k, pj);
        int c = F.mul(g.at(k, pj)[vk],
                      F.inv(g.at(pi, pj)[best_val]));
        g.row_op(k, pi, F.neg(c), vk - best_val);
      }
    }
    // Clear row pi with column operations sourced at the pivot column.
    for (int l = 0; l < N; ++l) {
      if (l == pj || !col_active[l]) continue;
      int guard = 0;
      while (g.valuation(pi, l) < kDeg) {
        if (++guard > 4 * kDeg)
          throw std::logic_error("rel_position: row clearing does not terminate");
        int vl = g.valuation(pi, l);
        int c = F.mul(g.at(pi, l)[vl], F.inv(g.at(pi, pj)[best_val]));
        g.col_op(l, pj, F.neg(c), vl - best_val);
      }
    }
    row_active[pi] = false;
    col_active[pj] = false;
  }
}

void check_bounds(const DatumPtr& d, int q) {
  if (q != 2 && q != 3 && q != 4)
    throw std::invalid_argument("latmodel: q must be one of 2, 3, 4");
  if (d->family == Family::GL && d->n > 3)
    throw std::invalid_argument("latmodel: GL enumeration bounded by n <= 3");
  if (d->family == Family::GSp && d->n > 2)
    throw std::invalid_argument("latmodel: GSp enumeration bounded by n <= 2");
}

int corank_from_mu(const DatumPtr& d, const Coweight& mu) {
  require_coweight(*d, mu);
  for (auto v : mu)
    if (v != 0 && v != -1)
      throw std::invalid_argument("latmodel: mu must have entries in {0, -1}");
  int cnt = 0;
  for (auto v : mu)
    if (v == -1) ++cnt;
  if (d->family == Family::GSp && cnt != d->n)
    throw std::invalid_argument("latmodel: GSp requires the Siegel coweight");
  if (d->family == Family::GL && (cnt == 0 || cnt == d->n))
    throw std::invalid_argument("latmodel: GL requires 0 < d < n");
  return d->family == Family::GL ? cnt : d->n;
}

size_t thread_budget(size_t work_items) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("PARAHORIC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && (unsigned long)v < hw) hw = unsigned(v);
  }
  return std::max<size_t>(1, std::min<size_t>(hw, work_items));
}

}  // namespace

std::vector<ChainPoint> enumerate_special_fiber(const DatumPtr& dat, const Coweight& mu,
                                                int q) {
  check_bounds(dat, q);
  int d = corank_from_mu(dat, mu);
  GFq F(q);
  int N = dat->N;
  std::vector<ChainPoint> out;
  if (dat->family == Family::GL) {
    auto subs = enumerate_subspaces(F, N, N - d);
    int slots = N;
    std::vector<int> choice(slots, -1);
    // Depth-first over the chain index, pruning by the nesting constraint.
    std::function<void(int)> rec = [&](int slot) {
      if (slot == slots) {
        if (!shift_maps_into(F, subs[choice[slots - 1]], subs[choice[0]])) return;
        ChainPoint p;
        p.family = Family::GL;
        p.n = N;
        p.d = d;
        p.q = q;
        for (int s = 0; s < slots; ++s) p.layers.push_back(subs[choice[s]]);
        out.push_back(std::move(p));
        return;
      }
      for (size_t c = 0; c < subs.size(); ++c) {
        if (slot > 0 && !shift_maps_into(F, subs[choice[slot - 1]], subs[c])) continue;
        choice[slot] = int(c);
        rec(slot + 1);
      }
    };
    rec(0);
  } else {
    int n = dat->n;
    auto subs = enumerate_subspaces(F, N, n);
    Mat J0 = gsp_form_level0(F, n);
    Mat Jn = gsp_form_leveln(F, n);
    std::vector<int> choice(n + 1, -1);
    std::function<void(int)> rec = [&](int slot) {
      if (slot == n + 1) {
        ChainPoint p;
        p.family = Family::GSp;
        p.n = n;
        p.d = n;
        p.q = q;
        for (int s = 0; s <= n; ++s) p.layers.push_back(subs[choice[s]]);
        out.push_back(std::move(p));
        return;
      }
      for (size_t c = 0; c < subs.size(); ++c) {
        if (slot == 0 && !is_isotropic(F, J0, subs[c])) continue;
        if (slot == n && !is_isotropic(F, Jn, subs[c])) continue;
        if (slot > 0 && !shift_maps_into(F, subs[choice[slot - 1]], subs[c])) continue;
        choice[slot] = int(c);
        rec(slot + 1);
      }
    };
    rec(0);
  }
  return out;
}

namespace {

// Columns: t * f_i in the e-basis, where f_i generates L_i over L_{i-1}.
PolyMat adapted_matrix(const GFq& F, const DatumPtr& d, const ChainPoint& point) {
  int N = d->N;
  ChainInM chain = chain_in_M(F, d, point);
  PolyMat g(N, F);
  for (int i = 1; i <= N; ++i) {
    const Mat& big = chain.levels[i];
    const Mat& small = chain.levels[i - 1];
    Vec f;
    for (const auto& cand : big) {
      if (!contains_vec(F, small, cand)) {
        f = cand;
        break;
      }
    }
    if (f.empty()) throw std::logic_error("rel_position: chain has no jump vector");
    // t * (a + t^{-1} a') has e_k coefficient a'_k + a_k t.
    for (int k = 0; k < N; ++k) {
      g.at(k, i - 1)[0] = f[N + k];
      g.at(k, i - 1)[1] = f[k];
    }
  }
  return g;
}

}  // namespace

AffineElt rel_position_iwahori(const DatumPtr& d, const ChainPoint& point) {
  GFq F(point.q);
  PolyMat g = adapted_matrix(F, d, point);
  reduce_to_monomial(g);
  return decode_monomial(d, g);
}

std::vector<std::vector<std::array<int, 2>>> chain_matrix(const DatumPtr& d,
                                                          const ChainPoint& p) {
  GFq F(p.q);
  PolyMat g = adapted_matrix(F, d, p);
  std::vector<std::vector<std::array<int, 2>>> out(
      d->N, std::vector<std::array<int, 2>>(d->N));
  for (int i = 0; i < d->N; ++i)
    for (int j = 0; j < d->N; ++j) out[i][j] = {g.at(i, j)[0], g.at(i, j)[1]};
  return out;
}

StrataCountReport strata_point_counts(const DatumPtr& d, const Coweight& mu, int q) {
  StrataCountReport rep;
  rep.mu = mu;
  rep.q = q;
  auto points = enumerate_special_fiber(d, mu, q);
  rep.total = (long long)points.size();

  std::vector<AffineElt> labels(points.size(), identity_elt(d));
  size_t nthreads = thread_budget(points.size());
  auto worker = [&](size_t t0) {
    for (size_t i = t0; i < points.size(); i += nthreads)
      labels[i] = invert(rel_position_iwahori(d, points[i]));
  };
  if (nthreads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& w : labels) rep.counts[w] += 1;

  auto adm = adm_set(d, mu);
  std::set<AffineElt> aset(adm.begin(), adm.end());
  rep.index_set_matches_adm = aset.size() == rep.counts.size();
  for (const auto& [w, c] : rep.counts)
    if (!aset.count(w)) rep.index_set_matches_adm = false;
  rep.counts_match_cells = rep.index_set_matches_adm;
  for (const auto& [w, c] : rep.counts) {
    long long expect = 1;
    for (long long i = 0; i < length(w); ++i) expect *= q;
    if (c != expect) rep.counts_match_cells = false;
  }
  return rep;
}

bool closure_witness(const DatumPtr& d, const Coweight& mu, int q, const AffineElt& w,
                     const AffineElt& wp) {
  auto adm = adm_set(d, mu);
  auto in_adm = [&](const AffineElt& x) {
    return std::find(adm.begin(), adm.end(), x) != adm.end();
  };
  if (!in_adm(w) || !in_adm(wp))
    throw std::invalid_argument("closure_witness: elements must lie in Adm(mu)");
  auto rep = strata_point_counts(d, mu, q);
  // The closure of the w' stratum is the union of the strata indexed by
  // the Bruhat ideal below w'; its point count must interpolate the
  // cells exactly, otherwise the witness is unusable.
  long long ideal_count = 0, ideal_expect = 0;
  for (const auto& x : adm) {
    if (!bruhat_leq(x, wp)) continue;
    auto it = rep.counts.find(x);
    ideal_count += it == rep.counts.end() ? 0 : it->second;
    long long cell = 1;
    for (long long i = 0; i < length(x); ++i) cell *= q;
    ideal_expect += cell;
  }
  if (ideal_count != ideal_expect)
    throw std::logic_error("closure_witness: ideal count does not match cells");
  auto it = rep.counts.find(w);
  long long stratum_points = it == rep.counts.end() ? 0 : it->second;
  return stratum_points > 0 && bruhat_leq(w, wp);
}

std::string dump_point(const DatumPtr& d, const ChainPoint& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.layers.size(); ++i) {
    os << "U" << i << ":";
    if (p.layers[i].empty()) os << " (zero)";
    os << "\n";
    for (const auto& row : p.layers[i]) {
      os << "  [";
      for (size_t k = 0; k < row.size(); ++k) {
        if (k) os << " ";
        os << row[k];
      }
      os << "]\n";
    }
  }
  os << "adapted matrix over F_q[t]/(t^2), columns generate the chain:\n";
  auto g = chain_matrix(d, p);
  for (int i = 0; i < d->N; ++i) {
    os << "  [";
    for (int j = 0; j < d->N; ++j) {
      if (j) os << ", ";
      auto [c0, c1] = g[i][j];
      if (c0 == 0 && c1 == 0)
        os << "0";
      else if (c1 == 0)
        os << c0;
      else if (c0 == 0)
        os << (c1 == 1 ? "" : std::to_string(c1)) << "t";
      else
        os << c0 << "+" << (c1 == 1 ? "" : std::to_string(c1)) << "t";
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace parahoric
