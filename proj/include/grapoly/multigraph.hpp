#ifndef GRAPOLY_MULTIGRAPH_HPP
#define GRAPOLY_MULTIGRAPH_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grapoly/errors.hpp"

namespace grapoly {

// One undirected edge. u == v encodes a loop (which counts 2 toward the
// degree of its vertex). Ids are unique and stable: deleting or contracting
// other edges never renumbers survivors, so per-edge weights keyed by id stay
// meaningful across minors.
struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
};

// A subset of the edges of a host graph, identified with the spanning
// subgraph on the full vertex set.
struct EdgeSubset {
  std::vector<int> ids;  // sorted, unique
};

struct ComponentRecord {
  std::vector<int> vertex_ids;
  std::vector<int> edge_ids;
  int nullity = 0;  // (#edges) - (#vertices) + 1
};

struct ComponentProfile {
  std::vector<ComponentRecord> components;
  // i_n: how many components have nullity n.
  std::map<int, int> nullity_histogram() const;
  int max_nullity() const;
};

// Finite multigraph: loops and parallel edges allowed, vertices indexed
// 0..vertex_count-1. All operations are pure: they return new graphs and
// never mutate the receiver, so values are freely shareable across threads.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_by_id(int id) const;
  bool has_edge(int id) const;
  bool is_loop(int id) const { return edge_by_id(id).is_loop(); }

  int add_vertex();
  // Returns the id of the new edge.
  int add_edge(int u, int v);

  // Loops count twice.
  int degree(int v) const;
  std::vector<int> degrees() const;

  int component_count() const;                       // k(G)
  int nullity() const { return edge_count() - vertex_count_ + component_count(); }
  int rank() const { return vertex_count_ - component_count(); }
  bool is_connected() const { return component_count() <= 1; }

  Multigraph delete_edge(int id) const;
  // Merges the endpoints of a non-loop edge into the smaller vertex index
  // (indices above the removed one shift down by one). For a loop this is
  // the same as deletion. If vertex_map is non-null it receives the
  // old-index -> new-index mapping.
  Multigraph contract_edge(int id, std::vector<int>* vertex_map = nullptr) const;
  // Clip degree-1 vertices (with their edge) until none remain.
  Multigraph core() const;
  // Replace every edge by a path of m edges; loops become m-cycles. m=1 is
  // the identity.
  Multigraph subdivide(int m) const;

  EdgeSubset full_edge_set() const;
  std::string encode() const;  // labeled canonical key (ids dropped)

  bool operator==(const Multigraph& o) const;

 private:
  int vertex_count_ = 0;
  int next_edge_id_ = 0;
  std::vector<Edge> edges_;
};

// Connected components of the spanning subgraph (V, s); isolated vertices
// appear as nullity-0 components.
ComponentProfile component_profile(const Multigraph& g, const EdgeSubset& s);

Multigraph bouquet(int n);
Multigraph cycle(int n);
Multigraph complete(int n);
Multigraph path(int n);  // path on n vertices (n-1 edges)
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// Text format: optional '#' comment lines, first data line "N M", then M
// lines "u v" with 0-based endpoints (u == v for a loop; duplicate lines are
// parallel edges). Parse errors carry the 1-based line number.
Multigraph from_edge_list(std::string_view text);
std::string to_edge_list(const Multigraph& g);

// Longest shortest-path distance; requires a connected nonempty graph.
int graph_diameter(const Multigraph& g);

}  // namespace grapoly

#endif
