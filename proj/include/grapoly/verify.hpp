#ifndef GRAPOLY_VERIFY_HPP
#define GRAPOLY_VERIFY_HPP

#include <string>
#include <vector>

#include "grapoly/corpus.hpp"
#include "grapoly/multigraph.hpp"

namespace grapoly {

struct VerifyOptions {
  int max_edges = 26;
  int max_vertices = 24;
  unsigned long seed = 0;
  int random_count = 200;
  int draws = 10;
  double tol = 1e-8;
  // Run only a deliberately corrupted expectation, to prove the harness
  // reports failures with a reproducer.
  bool self_test = false;
  std::vector<CorpusEntry> extra_graphs;
};

struct CheckRecord {
  std::string check;
  std::string graph;
  std::string status;  // "pass", "fail" or "skipped"
  double residual = 0.0;
  long long elapsed_ms = 0;
  std::string detail;  // failure reproducer (edge list + parameters)
};

struct VerifyReport {
  std::vector<CheckRecord> checks;  // sorted by (check, graph)
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace grapoly

#endif
