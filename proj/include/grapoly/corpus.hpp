#ifndef GRAPOLY_CORPUS_HPP
#define GRAPOLY_CORPUS_HPP

#include <string>
#include <vector>

#include "grapoly/multigraph.hpp"

namespace grapoly {

struct CorpusEntry {
  std::string name;
  Multigraph graph;
};

Multigraph petersen();
// Two vertices joined by three parallel edges.
Multigraph theta_graph();
// Two vertices, one loop on each, joined by a bridge.
Multigraph dumbbell_graph();

// The built-in named corpus: bouquets, cycles, complete graphs, the theta
// and dumbbell graphs, the Petersen graph, trees, subdivisions and a few
// disjoint unions. Covers loops, parallel edges, isolated vertices, both
// equality cases of the sub-coregraph bounds, and regularity classes.
std::vector<CorpusEntry> named_corpus();

// Seeded random multigraphs (loops and parallel edges allowed). The
// generator is fully deterministic for a given seed.
std::vector<CorpusEntry> random_corpus(unsigned long seed, int count, int max_vertices = 5,
                                       int max_edges = 8);

// Seeded random trees on 2..max_vertices vertices.
std::vector<CorpusEntry> random_trees(unsigned long seed, int count, int max_vertices = 8);

// Lookup by name: any named_corpus() entry, plus parametric forms
// "bouquet:N", "cycle:N", "complete:N", "path:N". Throws InputError on an
// unknown name.
Multigraph named_graph(const std::string& name);

}  // namespace grapoly

#endif
