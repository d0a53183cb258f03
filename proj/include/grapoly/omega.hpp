#ifndef GRAPOLY_OMEGA_HPP
#define GRAPOLY_OMEGA_HPP

#include <functional>
#include <map>
#include <vector>

#include "grapoly/multigraph.hpp"
#include "grapoly/polynomial.hpp"
#include "grapoly/theta.hpp"

namespace grapoly {

enum class OmegaRoute {
  specialization,
  vexpansion,
  deletion_contraction,
  monomer_dimer,
  determinant_sum,
};

struct OmegaResult {
  UnivariatePoly polynomial;
  OmegaRoute route = OmegaRoute::specialization;
};

// Integer subset sum specialized at the vertex value 2i (real form, no
// complex arithmetic), then exact removal of the (1-beta)^(|E|-|V|) factor.
// A division remainder here would falsify the divisibility theorem and
// aborts with DivisibilityError.
OmegaResult omega_specialize(const Multigraph& g, const Guards& guards = {});
// Subset sum keeping only subsets whose components all have nullity <= 1.
OmegaResult omega_vexpansion(const Multigraph& g, const Guards& guards = {});
// omega_G = omega_{G\e} + beta omega_{G/e} down to bouquet products.
OmegaResult omega_deletion_contraction(const Multigraph& g);
// Matching sum with edge weight -beta and vertex weight 1+(d_i-1)beta.
OmegaResult omega_via_monomer_dimer(const Multigraph& g, const Guards& guards = {});
// Exact evaluation at interpolation nodes via the cycle-union determinant
// sum, then exact rational interpolation back to the polynomial.
OmegaResult omega_via_determinant_sum(const Multigraph& g, const Guards& guards = {});

// Matchings: loops are never matchable. counts[k] = number of k-matchings.
std::vector<Integer> matching_counts(const Multigraph& g, const Guards& guards = {});
// Weighted matching sum with explicit per-edge and per-vertex weights.
Rational monomer_dimer(const Multigraph& g, const std::map<int, Rational>& mu,
                       const std::vector<Rational>& lambda, const Guards& guards = {});
// Matching sum as a polynomial in the edge activity (weights -beta and
// 1+(d_i-1)beta).
UnivariatePoly monomer_dimer_activity(const Multigraph& g, const Guards& guards = {});
// Signed matching generating polynomial sum_k (-1)^k p(k) x^(|V|-2k).
UnivariatePoly matching_polynomial(const Multigraph& g, const Guards& guards = {});

// d if every vertex has degree d, else -1.
int regularity(const Multigraph& g);
// For (q+1)-regular graphs: omega(u^2) == alpha(1/u + q u) u^|V| at each
// exact rational sample u != 0.
bool check_regular_identity(const Multigraph& g, const std::vector<Rational>& samples,
                            const Guards& guards = {});
// For (q+1)-regular graphs: w_{N-k} = w_k q^(N-2k).
bool check_coefficient_symmetry(const Multigraph& g);

struct ZeroReport {
  std::vector<Complex> roots;  // sorted by modulus, then argument
  double annulus_lower = 0.0;  // 1/(max core degree - 1)
  double annulus_upper = 0.0;  // 1/(min core degree - 1)
  bool annulus_ok = false;
  double max_residual = 0.0;
};
// Companion-matrix eigenvalues with balancing plus Newton polishing.
// Requires a nonempty core with minimum degree >= 2.
ZeroReport omega_zeros(const Multigraph& g, const Guards& guards = {});

// Exact value of omega at u^2 via the cycle-union determinant sum
// (fraction-free integer elimination after clearing denominators).
Rational omega_determinant_sum(const Multigraph& g, const Rational& u, const Guards& guards = {});
// Edge subsets in which every vertex has degree 0 or 2.
void enumerate_cycle_unions(const Multigraph& g,
                            const std::function<void(const EdgeSubset&)>& visit,
                            const Guards& guards = {});

// omega(1) as a count: matchings of the once-subdivided graph covering all
// original vertices, cross-checked against the nullity-one component
// expansion.
struct Beta2Record {
  Integer covering_matchings;
  Integer nullity_one_expansion;
  Integer omega_at_one;
  bool consistent = false;
};
Beta2Record subcoregraph_count_expansion_beta2(const Multigraph& g, const Guards& guards = {});

struct OmegaAtOneReport {
  Integer omega_at_one;
  Integer signed_matching_sum;  // sum over matchings of (-1)^|D| prod d_i
  Integer determinant_form;     // cycle-union sum of Laplacian minors
  bool dc_at_one_holds = false;
  bool all_ok = false;
};
OmegaAtOneReport omega_at_one_identities(const Multigraph& g, const Guards& guards = {});

// If no component of g is a tree, all omega coefficients are >= 0.
struct NonnegativityReport {
  bool applies = false;
  bool ok = false;
};
NonnegativityReport check_nonnegativity(const Multigraph& g);

// omega of the m-subdivision against (1+...+beta^(m-1))^(|E|-|V|) omega(beta^m),
// cross-multiplied when |E| < |V|.
bool check_subdivision_law(const Multigraph& g, int m, const Guards& guards = {});

}  // namespace grapoly

#endif
