#include "grapoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "grapoly/ising.hpp"
#include "grapoly/omega.hpp"
#include "grapoly/theta.hpp"

namespace grapoly {

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

struct ParamDraw {
  std::map<int, double> beta;
  std::vector<double> xi;
};

// xi in [e^-0.7, e^0.7] and |beta_e| small enough that every edge factor
// 1 + x y beta xi_u^{-x} xi_v^{-y} stays positive.
ParamDraw draw_in_domain(const Multigraph& g, std::mt19937_64& rng) {
  ParamDraw draw;
  draw.xi.resize(static_cast<size_t>(g.vertex_count()));
  for (double& x : draw.xi) x = std::exp(1.4 * (unit_interval(rng) - 0.5));
  for (const Edge& e : g.edges()) {
    const double mu = std::max(draw.xi[static_cast<size_t>(e.u)], 1.0 / draw.xi[static_cast<size_t>(e.u)]);
    const double mv = std::max(draw.xi[static_cast<size_t>(e.v)], 1.0 / draw.xi[static_cast<size_t>(e.v)]);
    draw.beta[e.id] = (1.8 * unit_interval(rng) - 0.9) / (mu * mv);
  }
  return draw;
}

std::string describe_draw(const ParamDraw& draw) {
  std::ostringstream out;
  out.precision(17);
  out << "beta:";
  for (const auto& [id, b] : draw.beta) out << " " << id << "=" << b;
  out << " xi:";
  for (double x : draw.xi) out << " " << x;
  return out.str();
}

class Runner {
 public:
  explicit Runner(VerifyReport& report) : report_(report) {}

  // body returns (pass, residual); GuardError means skipped, any other
  // exception is a failure.
  template <class Body>
  void run(const std::string& check, const std::string& graph_name, const Multigraph& graph,
           Body&& body, const std::string& parameters = {}) {
    CheckRecord record;
    record.check = check;
    record.graph = graph_name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto [ok, residual] = body();
      record.status = ok ? "pass" : "fail";
      record.residual = residual;
    } catch (const GuardError&) {
      record.status = "skipped";
    } catch (const std::exception& err) {
      record.status = "fail";
      record.detail = err.what();
    }
    record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (record.status == "fail") {
      std::string reproducer = "graph:\n" + to_edge_list(graph);
      if (!parameters.empty()) reproducer += "parameters: " + parameters + "\n";
      if (!record.detail.empty()) reproducer += "error: " + record.detail + "\n";
      record.detail = reproducer;
    }
    report_.checks.push_back(std::move(record));
  }

 private:
  VerifyReport& report_;
};

using PassResidual = std::pair<bool, double>;

PassResidual exact(bool ok) { return {ok, ok ? 0.0 : 1.0}; }
PassResidual within(double residual, double tol) { return {residual < tol, residual}; }

bool has_tree_component(const Multigraph& g) {
  for (const auto& comp : component_profile(g, g.full_edge_set()).components)
    if (comp.nullity == 0) return true;
  return false;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Runner runner(report);
  const Guards guards{options.max_edges, options.max_vertices};

  if (options.self_test) {
    // Deliberately corrupted expectation: proves a failing check surfaces
    // with a reproducer instead of being silently swallowed.
    const Multigraph k4 = complete(4);
    runner.run("self_test_corrupted_expectation", "k4", k4, [&]() -> PassResidual {
      BivariatePoly wrong(Integer(1));
      wrong.add_term(3, 0, 7);  // wrong on purpose
      return exact(theta_enumerate(k4, guards).polynomial == wrong);
    });
  } else {
    std::vector<CorpusEntry> corpus = named_corpus();
    {
      std::vector<CorpusEntry> random = random_corpus(options.seed, options.random_count);
      corpus.insert(corpus.end(), random.begin(), random.end());
      std::vector<CorpusEntry> trees = random_trees(options.seed + 1, 5);
      corpus.insert(corpus.end(), trees.begin(), trees.end());
    }
    corpus.insert(corpus.end(), options.extra_graphs.begin(), options.extra_graphs.end());

    std::mt19937_64 rng(options.seed);

    for (const CorpusEntry& entry : corpus) {
      const Multigraph& g = entry.graph;
      const std::string& name = entry.name;

      runner.run("theta_route_agreement", name, g, [&]() -> PassResidual {
        const BivariatePoly a = theta_enumerate(g, guards).polynomial;
        const BivariatePoly b = theta_deletion_contraction(g).polynomial;
        const BivariatePoly c = theta_vfunction_expansion(g, guards).polynomial;
        return exact(a == b && b == c && a.even_in_second());
      });

      runner.run("theta_dc_edgewise", name, g, [&]() -> PassResidual {
        const BivariatePoly whole = theta_enumerate(g, guards).polynomial;
        const BivariatePoly beta = BivariatePoly::first_variable();
        const BivariatePoly one_minus = BivariatePoly(Integer(1)) - beta;
        for (const Edge& e : g.edges()) {
          if (e.is_loop()) continue;
          const BivariatePoly lhs =
              one_minus * theta_enumerate(g.delete_edge(e.id), guards).polynomial +
              beta * theta_enumerate(g.contract_edge(e.id), guards).polynomial;
          if (!(lhs == whole)) return exact(false);
        }
        return exact(true);
      });

      runner.run("theta_core_invariance", name, g, [&]() -> PassResidual {
        return exact(theta_enumerate(g, guards).polynomial ==
                     theta_enumerate(g.core(), guards).polynomial);
      });

      runner.run("theta_tutte_gamma0", name, g, [&]() -> PassResidual {
        return exact(check_gamma0_specialization(g, guards));
      });

      runner.run("random_cluster_dc", name, g, [&]() -> PassResidual {
        const BivariatePoly whole = random_cluster(g, guards);
        const BivariatePoly beta = BivariatePoly::first_variable();
        const BivariatePoly one_minus = BivariatePoly(Integer(1)) - beta;
        for (const Edge& e : g.edges()) {
          const BivariatePoly lhs = one_minus * random_cluster(g.delete_edge(e.id), guards) +
                                    beta * random_cluster(g.contract_edge(e.id), guards);
          if (!(lhs == whole)) return exact(false);
        }
        return exact(true);
      });

      if (g.is_connected()) {
        runner.run("theta_beta1_forms", name, g, [&]() -> PassResidual {
          const BivariatePoly theta = theta_deletion_contraction(g).polynomial;
          const UnivariatePoly at_one = theta_beta1_gamma_poly(g);
          // Direct coefficient comparison against the binomial formula.
          if (g.nullity() >= 1) {
            const std::vector<Integer> c = theta_beta1_coefficients(g.nullity());
            UnivariatePoly series;
            for (size_t l = 0; l < c.size(); ++l) series.add_term(2 * static_cast<int>(l), c[l]);
            if (!(series == at_one)) return exact(false);
          }
          for (const Rational& xi : {Rational(1), Rational(2), Rational(3, 2)}) {
            const Rational closed = theta_beta1_closed_form(g, xi);
            const Rational direct = theta.eval(Rational(1), xi - 1 / xi);
            if (closed != direct) return exact(false);
          }
          return exact(true);
        });

        runner.run("subcoregraph_bounds", name, g, [&]() -> PassResidual {
          const Integer count = subcoregraph_count(g, guards);
          const Integer lower = subcoregraph_lower_bound(g.nullity());
          const Integer upper = subcoregraph_upper_bound(g.nullity());
          return exact(lower <= count && count <= upper);
        });
      }

      {
        bool degree3_applicable = g.is_connected() && g.nullity() >= 1;
        if (degree3_applicable)
          for (int d : g.core().degrees())
            if (d > 3) degree3_applicable = false;
        if (degree3_applicable) {
          runner.run("subcoregraph_degree3", name, g, [&]() -> PassResidual {
            const std::map<int, Integer> counts = count_by_degree3_vertices(g, guards);
            const std::vector<Integer> expected = theta_beta1_coefficients(g.nullity());
            for (int l = 0; l < g.nullity(); ++l)
              if (counts.at(l) != expected[static_cast<size_t>(l)]) return exact(false);
            return exact(true);
          });
        }
      }

      runner.run("omega_route_agreement", name, g, [&]() -> PassResidual {
        const UnivariatePoly a = omega_specialize(g, guards).polynomial;
        const UnivariatePoly b = omega_vexpansion(g, guards).polynomial;
        const UnivariatePoly c = omega_deletion_contraction(g).polynomial;
        const UnivariatePoly d = omega_via_monomer_dimer(g, guards).polynomial;
        const UnivariatePoly e = omega_via_determinant_sum(g, guards).polynomial;
        return exact(a == b && b == c && c == d && d == e);
      });

      runner.run("omega_structure_law", name, g, [&]() -> PassResidual {
        const UnivariatePoly omega = omega_specialize(g, guards).polynomial;
        if (omega.coeff(0) != 1) return exact(false);
        const Multigraph core = g.core();
        if (omega.degree() != core.vertex_count()) return exact(false);
        Integer leading = 1;
        for (int d : core.degrees()) leading *= Integer(d - 1);
        return exact(omega.coeff(omega.degree()) == leading);
      });

      runner.run("omega_nonnegativity", name, g, [&]() -> PassResidual {
        const NonnegativityReport r = check_nonnegativity(g);
        return exact(!r.applies || r.ok);
      });

      runner.run("omega_core_invariance", name, g, [&]() -> PassResidual {
        return exact(omega_specialize(g, guards).polynomial ==
                     omega_specialize(g.core(), guards).polynomial);
      });

      runner.run("matching_consistency", name, g, [&]() -> PassResidual {
        const std::vector<Integer> p = matching_counts(g, guards);
        if (p.empty() || p[0] != 1) return exact(false);
        Integer total = 0;
        for (const Integer& c : p) total += c;
        // Independent oracle: delete-edge / delete-both-endpoints recursion.
        auto count_rec = [&](auto&& self, const Multigraph& h) -> Integer {
          const Edge* pivot = nullptr;
          for (const Edge& e : h.edges())
            if (!e.is_loop()) {
              pivot = &e;
              break;
            }
          if (!pivot) return 1;
          const Multigraph without = h.delete_edge(pivot->id);
          Multigraph both_gone = without;
          // Delete every edge touching either endpoint, then the endpoints
          // disappear implicitly (isolated vertices do not affect counts).
          for (const Edge& e : without.edges())
            if (e.u == pivot->u || e.v == pivot->u || e.u == pivot->v || e.v == pivot->v)
              both_gone = both_gone.delete_edge(e.id);
          return self(self, without) + self(self, both_gone);
        };
        return exact(total == count_rec(count_rec, g));
      });

      if (regularity(g) >= 2) {
        runner.run("omega_regular_symmetry", name, g, [&]() -> PassResidual {
          return exact(check_coefficient_symmetry(g));
        });
        runner.run("omega_regular_matching", name, g, [&]() -> PassResidual {
          const std::vector<Rational> samples{Rational(1, 3), Rational(1, 2), Rational(1),
                                              Rational(2), Rational(3)};
          return exact(check_regular_identity(g, samples, guards));
        });
      }

      if (!has_tree_component(g) && g.vertex_count() > 0) {
        runner.run("omega_zero_annulus", name, g, [&]() -> PassResidual {
          const ZeroReport zeros = omega_zeros(g, guards);
          if (!zeros.annulus_ok) return exact(false);
          const int d = regularity(g);
          if (d >= 2) {
            for (const Complex& z : zeros.roots)
              if (std::abs(std::abs(z) - 1.0 / (d - 1)) > 1e-8) return exact(false);
          }
          return exact(true);
        });
      }

      runner.run("omega_determinant_identity", name, g, [&]() -> PassResidual {
        const UnivariatePoly omega = omega_specialize(g, guards).polynomial;
        for (const Rational& u : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2),
                                  Rational(3)}) {
          if (omega_determinant_sum(g, u, guards) != omega.eval(u * u)) return exact(false);
        }
        return exact(true);
      });

      for (int m : {2, 3}) {
        if (g.edge_count() * m > options.max_edges) continue;
        runner.run("omega_subdivision_law_m" + std::to_string(m), name, g,
                   [&]() -> PassResidual { return exact(check_subdivision_law(g, m, guards)); });
      }

      runner.run("omega_beta1_identities", name, g, [&]() -> PassResidual {
        const Beta2Record half = subcoregraph_count_expansion_beta2(g, guards);
        if (!half.consistent) return exact(false);
        const OmegaAtOneReport one = omega_at_one_identities(g, guards);
        return exact(one.all_ok);
      });

      if (g.vertex_count() <= 10) {
        runner.run("bethe_ratio", name, g, [&]() -> PassResidual {
          double worst = 0.0;
          std::string last_params;
          for (int d = 0; d < options.draws; ++d) {
            BetheRatioReport ratio;
            bool drawn = false;
            for (int attempt = 0; attempt < 10 && !drawn; ++attempt) {
              const ParamDraw draw = draw_in_domain(g, rng);
              last_params = describe_draw(draw);
              try {
                ratio = verify_bethe_ratio(g, draw.beta, draw.xi, options.tol, guards);
                drawn = true;
              } catch (const DomainError&) {
              }
            }
            if (!drawn) throw NumericError("could not draw in-domain parameters");
            worst = std::max(worst, ratio.rel_error);
            // On forests the approximation is exact, not merely close.
            if (g.nullity() == 0 && std::abs(ratio.ratio - 1.0) >= 1e-10) worst = 1.0;
          }
          return within(worst, options.tol);
        }, "seeded draws");

        runner.run("ising_vdw", name, g, [&]() -> PassResidual {
          IsingModel m;
          m.host = g;
          m.field.assign(static_cast<size_t>(g.vertex_count()), 0.0);
          for (const Edge& e : g.edges()) m.coupling[e.id] = 2.0 * unit_interval(rng) - 1.0;
          return exact(van_der_waerden_check(m, 1e-10, guards));
        });

        runner.run("ising_field_expansion", name, g, [&]() -> PassResidual {
          IsingModel m;
          m.host = g;
          m.field.resize(static_cast<size_t>(g.vertex_count()));
          for (double& h : m.field) h = 1.6 * unit_interval(rng) - 0.8;
          for (const Edge& e : g.edges()) m.coupling[e.id] = 2.0 * unit_interval(rng) - 1.0;
          return exact(field_expansion_check(m, 1e-10, guards));
        });
      }

      if (g.is_connected() && g.nullity() == 0 && g.vertex_count() <= 10) {
        runner.run("bp_tree_exactness", name, g, [&]() -> PassResidual {
          IsingModel m;
          m.host = g;
          m.field.resize(static_cast<size_t>(g.vertex_count()));
          for (double& h : m.field) h = 1.2 * unit_interval(rng) - 0.6;
          for (const Edge& e : g.edges()) m.coupling[e.id] = 1.6 * unit_interval(rng) - 0.8;
          BpOptions bp_options;
          bp_options.damping = 0.0;  // undamped sweeps settle in diameter steps
          bp_options.tol = 1e-13;
          const BpResult bp = run_belief_propagation(m, bp_options);
          if (!bp.converged || bp.iterations > graph_diameter(g) + 1) return exact(false);
          const double log_z = ising_log_partition_bruteforce(m, guards);
          return within(std::abs(bp.log_z_bethe - log_z), 1e-9);
        });
      }
    }

    // Loop edges break the deletion-contraction reduction for theta but not
    // for the random-cluster sum; pin the counterexample once.
    {
      const Multigraph b1 = bouquet(1);
      runner.run("random_cluster_loop_contrast", "b1", b1, [&]() -> PassResidual {
        const BivariatePoly theta_b1 = theta_enumerate(b1, guards).polynomial;
        const BivariatePoly theta_b0 = theta_enumerate(bouquet(0), guards).polynomial;
        const BivariatePoly beta = BivariatePoly::first_variable();
        const BivariatePoly one_minus = BivariatePoly(Integer(1)) - beta;
        const bool theta_reduces = theta_b1 == one_minus * theta_b0 + beta * theta_b0;
        const BivariatePoly r_b1 = random_cluster(b1, guards);
        const BivariatePoly r_b0 = random_cluster(bouquet(0), guards);
        const bool r_reduces = r_b1 == one_minus * r_b0 + beta * r_b0;
        return exact(!theta_reduces && r_reduces);
      });
    }

    // Numeric weighted checks on a compact slice of the corpus.
    for (const CorpusEntry& entry : corpus) {
      const Multigraph& g = entry.graph;
      if (g.edge_count() > 12 || g.edge_count() == 0) continue;
      const std::string& name = entry.name;

      ParamDraw draw = draw_in_domain(g, rng);
      const std::string params = describe_draw(draw);

      runner.run("theta_weighted_reduction", name, g, [&]() -> PassResidual {
        const BivariatePoly theta = theta_deletion_contraction(g).polynomial;
        const Complex beta(0.37, 0.0), gamma(0.81, 0.0);
        const Complex direct = theta.eval(beta, gamma);
        const Complex weighted = theta_weighted(uniform_weights(g, beta, gamma), guards);
        return within(std::abs(direct - weighted) / (1.0 + std::abs(direct)), 1e-10);
      });

      runner.run("theta_vertex_sum_agreement", name, g, [&]() -> PassResidual {
        WeightedInstance w;
        w.host = g;
        for (const auto& [id, b] : draw.beta) w.beta[id] = Complex(b, 0.0);
        w.xi = std::vector<Complex>();
        for (double x : draw.xi) w.xi->push_back(Complex(x, 0.0));
        for (double x : draw.xi) w.gamma.push_back(Complex(x - 1.0 / x, 0.0));
        const Complex direct = theta_weighted(w, guards);
        const Complex vertex_sum = theta_weighted_vertex_sum(w, guards);
        return within(std::abs(direct - vertex_sum) / (1.0 + std::abs(direct)), 1e-9);
      }, params);

      runner.run("theta_weighted_dc", name, g, [&]() -> PassResidual {
        const Edge* pivot = nullptr;
        for (const Edge& e : g.edges())
          if (!e.is_loop() && (!pivot || e.id < pivot->id)) pivot = &e;
        if (!pivot) return exact(true);
        WeightedInstance w = uniform_weights(g, Complex(0), Complex(0.65, 0.0));
        for (const auto& [id, b] : draw.beta) w.beta[id] = Complex(b, 0.0);
        const Complex whole = theta_weighted(w, guards);
        const Complex beta_e = w.beta.at(pivot->id);
        const Complex reduced =
            (Complex(1.0) - beta_e) * theta_weighted(weighted_delete(w, pivot->id), guards) +
            beta_e * theta_weighted(weighted_contract(w, pivot->id), guards);
        return within(std::abs(whole - reduced) / (1.0 + std::abs(whole)), 1e-9);
      }, params);

      runner.run("theta_expansion_agreement", name, g, [&]() -> PassResidual {
        WeightedInstance w = uniform_weights(g, Complex(0), Complex(0.65, 0.0));
        for (const auto& [id, b] : draw.beta) w.beta[id] = Complex(b, 0.0);
        const Complex direct = theta_weighted(w, guards);
        const Complex expansion = theta_weighted_expansion(w, guards);
        return within(std::abs(direct - expansion) / (1.0 + std::abs(direct)), 1e-9);
      }, params);
    }

    // Multiplicativity spot checks against a fixed second factor.
    for (const CorpusEntry& entry : named_corpus()) {
      if (entry.graph.edge_count() > 10) continue;
      const Multigraph joint = disjoint_union(entry.graph, cycle(3));
      runner.run("theta_multiplicativity", entry.name, joint, [&]() -> PassResidual {
        return exact(theta_enumerate(joint, guards).polynomial ==
                     theta_enumerate(entry.graph, guards).polynomial *
                         theta_enumerate(cycle(3), guards).polynomial);
      });
      runner.run("omega_multiplicativity", entry.name, joint, [&]() -> PassResidual {
        return exact(omega_specialize(joint, guards).polynomial ==
                     omega_specialize(entry.graph, guards).polynomial *
                         omega_specialize(cycle(3), guards).polynomial);
      });
    }

    // Cycle fixed points: parameters extracted from converged beliefs must
    // reproduce Z/Z_B.
    for (int n : {3, 4, 5, 6}) {
      const Multigraph g = cycle(n);
      runner.run("bp_cycle_fixed_point", "c" + std::to_string(n), g, [&]() -> PassResidual {
        IsingModel m;
        m.host = g;
        m.field.resize(static_cast<size_t>(n));
        for (double& h : m.field) h = 0.3 * unit_interval(rng) - 0.15;
        for (const Edge& e : g.edges()) m.coupling[e.id] = 0.3 * unit_interval(rng) - 0.15;
        BpOptions bp_options;
        bp_options.max_iters = 5000;
        bp_options.damping = 0.5;
        bp_options.tol = 1e-13;
        const BpResult bp = run_belief_propagation(m, bp_options);
        if (!bp.converged) return exact(false);
        std::vector<double> xi(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
          xi[static_cast<size_t>(v)] = std::sqrt(bp.beliefs.vertex[static_cast<size_t>(v)][0] /
                                                 bp.beliefs.vertex[static_cast<size_t>(v)][1]);
        WeightedInstance w;
        w.host = g;
        for (const Edge& e : g.edges()) {
          const double norm_u = xi[static_cast<size_t>(e.u)] + 1.0 / xi[static_cast<size_t>(e.u)];
          const double norm_v = xi[static_cast<size_t>(e.v)] + 1.0 / xi[static_cast<size_t>(e.v)];
          const double beta_e = bp.beliefs.edge.at(e.id)[0] * norm_u * norm_v -
                                xi[static_cast<size_t>(e.u)] * xi[static_cast<size_t>(e.v)];
          w.beta[e.id] = Complex(beta_e, 0.0);
        }
        for (double x : xi) w.gamma.push_back(Complex(x - 1.0 / x, 0.0));
        const double theta = theta_weighted(w, guards).real();
        const double log_z = ising_log_partition_bruteforce(m, guards);
        const double ratio = std::exp(log_z - bp.log_z_bethe);
        return within(std::abs(ratio - theta) / std::abs(theta), 1e-6);
      });
    }
  }

  std::sort(report.checks.begin(), report.checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.graph < b.graph;
  });
  for (const CheckRecord& record : report.checks) {
    if (record.status == "pass")
      ++report.passed;
    else if (record.status == "fail")
      ++report.failed;
    else
      ++report.skipped;
  }
  return report;
}

}  // namespace grapoly
