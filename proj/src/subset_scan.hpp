#ifndef GRAPOLY_SUBSET_SCAN_HPP
#define GRAPOLY_SUBSET_SCAN_HPP

#include <cstdint>
#include <vector>

#include "grapoly/multigraph.hpp"

namespace grapoly::detail {

// Depth-first scan over edge subsets with degree-based pruning.
//
// Edges are visited in storage order. Once position p is decided, every
// vertex whose incident edges all lie at positions <= p has its subgraph
// degree fixed; the policy can then reject the branch. This is what makes
// sub-coregraph style sums (where a degree-1 vertex kills the term) run in
// time proportional to the surviving subsets instead of 2^|E|.
//
// Policy requirements:
//   bool admit(int degree_after_include)  -- include-branch cap, e.g. <= 2
//   bool finalize(int final_degree)       -- decided-vertex filter
// Leaf: void(std::uint64_t mask, int size, const std::vector<int>& degrees)
template <class Policy, class Leaf>
void scan_subsets(const Multigraph& g, Policy&& policy, Leaf&& leaf) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  std::vector<int> last_pos(static_cast<size_t>(n), -1);
  for (int p = 0; p < m; ++p) {
    const Edge& e = g.edges()[static_cast<size_t>(p)];
    last_pos[static_cast<size_t>(e.u)] = p;
    last_pos[static_cast<size_t>(e.v)] = p;
  }
  // Vertices that appear on no edge are final from the start.
  for (int v = 0; v < n; ++v)
    if (last_pos[static_cast<size_t>(v)] < 0 && !policy.finalize(0)) return;
  std::vector<std::vector<int>> finalized_at(static_cast<size_t>(m));
  for (int v = 0; v < n; ++v)
    if (last_pos[static_cast<size_t>(v)] >= 0)
      finalized_at[static_cast<size_t>(last_pos[static_cast<size_t>(v)])].push_back(v);

  std::vector<int> deg(static_cast<size_t>(n), 0);
  auto finals_ok = [&](int p) {
    for (int v : finalized_at[static_cast<size_t>(p)])
      if (!policy.finalize(deg[static_cast<size_t>(v)])) return false;
    return true;
  };

  auto rec = [&](auto&& self, int p, std::uint64_t mask, int size) -> void {
    if (p == m) {
      leaf(mask, size, deg);
      return;
    }
    const Edge& e = g.edges()[static_cast<size_t>(p)];
    // Exclude e.
    if (finals_ok(p)) self(self, p + 1, mask, size);
    // Include e.
    const int du = deg[static_cast<size_t>(e.u)] + (e.is_loop() ? 2 : 1);
    const int dv = e.is_loop() ? du : deg[static_cast<size_t>(e.v)] + 1;
    if (policy.admit(du) && policy.admit(dv)) {
      deg[static_cast<size_t>(e.u)] = du;
      if (!e.is_loop()) deg[static_cast<size_t>(e.v)] = dv;
      if (finals_ok(p)) self(self, p + 1, mask | (std::uint64_t{1} << p), size + 1);
      deg[static_cast<size_t>(e.u)] = e.is_loop() ? du - 2 : du - 1;
      if (!e.is_loop()) deg[static_cast<size_t>(e.v)] = dv - 1;
    }
  };
  rec(rec, 0, 0, 0);
}

// Every vertex must end with degree != 1 (sub-coregraph support).
struct NoDegreeOnePolicy {
  static bool admit(int) { return true; }
  static bool finalize(int d) { return d != 1; }
};

// Every vertex must end with even degree (Eulerian subgraph support).
struct EvenDegreePolicy {
  static bool admit(int) { return true; }
  static bool finalize(int d) { return d % 2 == 0; }
};

// Every vertex degree stays <= 2 and ends in {0, 2} (disjoint cycle unions).
struct CycleUnionPolicy {
  static bool admit(int d) { return d <= 2; }
  static bool finalize(int d) { return d == 0 || d == 2; }
};

// Unrestricted scan.
struct AllSubsetsPolicy {
  static bool admit(int) { return true; }
  static bool finalize(int) { return true; }
};

}  // namespace grapoly::detail

#endif
