#include "grapoly/corpus.hpp"

#include <random>

namespace grapoly {

Multigraph petersen() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);          // outer cycle
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);                // spokes
  return g;
}

Multigraph theta_graph() {
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  return g;
}

Multigraph dumbbell_graph() {
  Multigraph g(2);
  g.add_edge(0, 0);
  g.add_edge(1, 1);
  g.add_edge(0, 1);
  return g;
}

std::vector<CorpusEntry> named_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int n = 0; n <= 4; ++n) corpus.push_back({"b" + std::to_string(n), bouquet(n)});
  for (int n = 1; n <= 8; ++n) corpus.push_back({"c" + std::to_string(n), cycle(n)});
  corpus.push_back({"k4", complete(4)});
  corpus.push_back({"k5", complete(5)});
  corpus.push_back({"theta", theta_graph()});
  corpus.push_back({"dumbbell", dumbbell_graph()});
  corpus.push_back({"petersen", petersen()});
  corpus.push_back({"t2", path(2)});
  corpus.push_back({"path5", path(5)});
  Multigraph star5(5);
  for (int leaf = 1; leaf < 5; ++leaf) star5.add_edge(0, leaf);
  corpus.push_back({"star5", star5});
  corpus.push_back({"theta_sub2", theta_graph().subdivide(2)});
  corpus.push_back({"theta_sub3", theta_graph().subdivide(3)});
  corpus.push_back({"k4_sub2", complete(4).subdivide(2)});
  corpus.push_back({"dumbbell_sub2", dumbbell_graph().subdivide(2)});
  corpus.push_back({"b2_sub2", bouquet(2).subdivide(2)});
  corpus.push_back({"b2_sub3", bouquet(2).subdivide(3)});
  corpus.push_back({"b3_sub2", bouquet(3).subdivide(2)});
  corpus.push_back({"two_triangles", disjoint_union(cycle(3), cycle(3))});
  corpus.push_back({"c3_plus_t2", disjoint_union(cycle(3), path(2))});
  corpus.push_back({"c4_plus_b1", disjoint_union(cycle(4), bouquet(1))});
  return corpus;
}

std::vector<CorpusEntry> random_corpus(unsigned long seed, int count, int max_vertices,
                                       int max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> corpus;
  corpus.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_vertices));
    const int m = static_cast<int>(rng() % static_cast<unsigned long>(max_edges + 1));
    Multigraph g(n);
    for (int e = 0; e < m; ++e) {
      const int u = static_cast<int>(rng() % static_cast<unsigned long>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned long>(n));
      g.add_edge(u, v);
    }
    corpus.push_back({"rand" + std::to_string(i), std::move(g)});
  }
  return corpus;
}

std::vector<CorpusEntry> random_trees(unsigned long seed, int count, int max_vertices) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> corpus;
  corpus.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned long>(max_vertices - 1));
    Multigraph g(n);
    for (int v = 1; v < n; ++v)
      g.add_edge(v, static_cast<int>(rng() % static_cast<unsigned long>(v)));
    corpus.push_back({"tree" + std::to_string(i), std::move(g)});
  }
  return corpus;
}

Multigraph named_graph(const std::string& name) {
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string kind = name.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad graph parameter in '" + name + "'");
    }
    if (kind == "bouquet") return bouquet(n);
    if (kind == "cycle") return cycle(n);
    if (kind == "complete") return complete(n);
    if (kind == "path") return path(n);
    throw InputError("unknown graph family '" + kind + "'");
  }
  for (const CorpusEntry& entry : named_corpus())
    if (entry.name == name) return entry.graph;
  throw InputError("unknown graph name '" + name + "'");
}

}  // namespace grapoly
