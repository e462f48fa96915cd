#pragma once

#include "parahoric/rational.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace parahoric {

enum class Family { GL, GSp };

using Coweight = std::vector<long long>;
// Finite Weyl elements as permutations in one-line form, 0-based:
// perm[i] = image of position i.  Acting on coweights by
// (w.lam)[w[i]] = lam[i], i.e. coordinates are pushed forward.
using Perm = std::vector<int>;

Perm perm_identity(int N);
Perm perm_compose(const Perm& u, const Perm& v);  // (uv)(i) = u(v(i))
Perm perm_inverse(const Perm& p);
int perm_order(const Perm& p);

template <typename T>
std::vector<T> perm_apply(const Perm& w, const std::vector<T>& lam) {
  std::vector<T> out(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) out[w[i]] = lam[i];
  return out;
}

// One positive root together with its coroot and its reflection,
// the latter stored as a coordinate permutation (valid on the
// coweight lattice of the family).
struct RootEntry {
  std::vector<long long> root;     // pairing vector in Z^N
  std::vector<long long> coroot;   // element of the coweight lattice
  Perm reflection;
};

// Root-theoretic data for GL_n (N = n) or GSp_2n (N = 2n).
struct GroupDatum {
  Family family = Family::GL;
  int n = 0;  // rank parameter: ambient dim for GL, half-rank for GSp
  int N = 0;  // coordinate dimension of the coweight lattice

  std::vector<RootEntry> positive_roots;
  std::vector<int> simple_indices;      // indices into positive_roots
  int highest_root_index = -1;
  RatVec rho;                           // half-sum of positive roots
  std::vector<Perm> weyl_generators;    // simple reflections of W_0
  RatVec alcove_interior;               // interior point of the base alcove
  std::vector<RatVec> alcove_vertices;  // vertices of the closed base alcove
  Coweight tau1_nu;                     // Omega generator, translation part
  Perm tau1_w;                          // Omega generator, finite part

  bool same_group(const GroupDatum& o) const {
    return family == o.family && n == o.n;
  }
  std::string family_name() const { return family == Family::GL ? "gl" : "gsp"; }
};

using DatumPtr = std::shared_ptr<const GroupDatum>;

// Builds the root datum.  Requires n >= 2 for GL and n >= 1 for GSp.
DatumPtr build_group_datum(Family family, int n);

// Canonical duality pairing <root, lambda>.
long long pairing(const std::vector<long long>& root, const Coweight& lam);
Rat pairing_rat(const std::vector<long long>& root, const RatVec& v);

// Checks membership in the coweight lattice (GSp: a_i + b_i = c).
bool in_coweight_lattice(const GroupDatum& d, const Coweight& lam);
void require_coweight(const GroupDatum& d, const Coweight& lam);

// Similitude / central coordinate: sum for GL, c for GSp.
long long central_coordinate(const GroupDatum& d, const Coweight& lam);
Rat central_coordinate_rat(const GroupDatum& d, const RatVec& v);

// Finite Weyl orbit of lam; sorted canonically.
std::vector<Coweight> weyl_orbit(const GroupDatum& d, const Coweight& lam);

// All elements of W_0, by closure of the generators.
std::vector<Perm> finite_weyl_elements(const GroupDatum& d);

bool is_dominant(const GroupDatum& d, const RatVec& v);
RatVec dominant_representative(const GroupDatum& d, const RatVec& v);
Coweight dominant_representative(const GroupDatum& d, const Coweight& lam);

// |<alpha, mu>| <= 1 for all roots alpha.
bool is_minuscule(const GroupDatum& d, const Coweight& mu);

// Exact test for v in Conv(W mu): central coordinates agree and the
// dominant representative of v is <= dominant(mu) in the dominance
// order (nonnegative rational combination of simple coroots).
bool in_convex_hull(const GroupDatum& d, const RatVec& v, const Coweight& mu);

// Vertices of the closed base alcove, one per wall omitted, modulo the
// central direction.  n vertices for GL_n, n+1 for GSp_2n.
std::vector<RatVec> base_alcove_vertices(const GroupDatum& d);

}  // namespace parahoric
