#include "grapoly/ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subset_scan.hpp"

namespace grapoly {

namespace {

int spin_of(std::uint64_t spins, int v) { return (spins >> v) & 1u ? -1 : +1; }

double xlogx(double x) { return x > 1e-300 ? x * std::log(x) : 0.0; }

}  // namespace

void validate_model(const IsingModel& m) {
  if (static_cast<int>(m.field.size()) != m.host.vertex_count())
    throw InputError("field must assign a value to every vertex");
  for (const Edge& e : m.host.edges())
    if (!m.coupling.count(e.id))
      throw InputError("coupling missing for edge id " + std::to_string(e.id));
  for (const auto& [id, j] : m.coupling)
    if (!std::isfinite(j)) throw InputError("non-finite coupling");
  for (double h : m.field)
    if (!std::isfinite(h)) throw InputError("non-finite field");
}

double ising_log_partition_bruteforce(const IsingModel& m, const Guards& guards) {
  validate_model(m);
  check_vertex_guard(m.host, guards);
  const Multigraph& g = m.host;
  const int n = g.vertex_count();

  std::vector<double> energies;
  energies.reserve(size_t{1} << n);
  for (std::uint64_t spins = 0; spins < (std::uint64_t{1} << n); ++spins) {
    double energy = 0.0;
    for (const Edge& e : g.edges())
      energy += m.coupling.at(e.id) * spin_of(spins, e.u) * spin_of(spins, e.v);
    for (int v = 0; v < n; ++v) energy += m.field[static_cast<size_t>(v)] * spin_of(spins, v);
    energies.push_back(energy);
  }
  const double peak = *std::max_element(energies.begin(), energies.end());
  double sum = 0.0;
  for (double e : energies) sum += std::exp(e - peak);
  return peak + std::log(sum);
}

BeliefSet beliefs_from_parameters(const Multigraph& g, const std::map<int, double>& beta,
                                  const std::vector<double>& xi) {
  if (static_cast<int>(xi.size()) != g.vertex_count())
    throw InputError("xi must assign a value to every vertex");
  for (double x : xi)
    if (!(x > 0)) throw DomainError("xi must be positive");
  for (const Edge& e : g.edges())
    if (!beta.count(e.id)) throw InputError("beta missing for edge id " + std::to_string(e.id));

  BeliefSet beliefs;
  beliefs.vertex.resize(static_cast<size_t>(g.vertex_count()));
  std::vector<double> norm(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    norm[static_cast<size_t>(v)] = xi[static_cast<size_t>(v)] + 1.0 / xi[static_cast<size_t>(v)];
    beliefs.vertex[static_cast<size_t>(v)] = {xi[static_cast<size_t>(v)] / norm[static_cast<size_t>(v)],
                                              (1.0 / xi[static_cast<size_t>(v)]) / norm[static_cast<size_t>(v)]};
  }
  for (const Edge& e : g.edges()) {
    std::array<double, 4> table{};
    for (int si = 0; si < 2; ++si)
      for (int sj = 0; sj < 2; ++sj) {
        const int x = si == 0 ? +1 : -1;
        const int y = sj == 0 ? +1 : -1;
        const double num = std::pow(xi[static_cast<size_t>(e.u)], x) * std::pow(xi[static_cast<size_t>(e.v)], y) +
                           beta.at(e.id) * x * y;
        if (!(num > 0))
          throw DomainError("belief entry not positive on edge id " + std::to_string(e.id));
        table[static_cast<size_t>((si << 1) | sj)] =
            num / (norm[static_cast<size_t>(e.u)] * norm[static_cast<size_t>(e.v)]);
      }
    beliefs.edge[e.id] = table;
  }

  // Construction-level identities, recorded as residuals.
  for (const Edge& e : g.edges()) {
    const auto& t = beliefs.edge[e.id];
    beliefs.max_normalization_residual = std::max(
        beliefs.max_normalization_residual, std::abs(t[0] + t[1] + t[2] + t[3] - 1.0));
    for (int si = 0; si < 2; ++si) {
      const double row = t[static_cast<size_t>((si << 1) | 0)] + t[static_cast<size_t>((si << 1) | 1)];
      beliefs.max_marginalization_residual =
          std::max(beliefs.max_marginalization_residual,
                   std::abs(row - beliefs.vertex[static_cast<size_t>(e.u)][static_cast<size_t>(si)]));
    }
    for (int sj = 0; sj < 2; ++sj) {
      const double col = t[static_cast<size_t>((0 << 1) | sj)] + t[static_cast<size_t>((1 << 1) | sj)];
      beliefs.max_marginalization_residual =
          std::max(beliefs.max_marginalization_residual,
                   std::abs(col - beliefs.vertex[static_cast<size_t>(e.v)][static_cast<size_t>(sj)]));
    }
  }
  return beliefs;
}

TransformOutput transform_to_ising(const Multigraph& g, const std::map<int, double>& beta,
                                   const std::vector<double>& xi) {
  if (static_cast<int>(xi.size()) != g.vertex_count())
    throw InputError("xi must assign a value to every vertex");
  for (double x : xi)
    if (!(x > 0)) throw DomainError("xi must be positive");

  TransformOutput out;
  out.vertex_scale.resize(static_cast<size_t>(g.vertex_count()));
  out.base_field.resize(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.vertex_scale[static_cast<size_t>(v)] = xi[static_cast<size_t>(v)] + 1.0 / xi[static_cast<size_t>(v)];
    out.base_field[static_cast<size_t>(v)] = std::log(xi[static_cast<size_t>(v)]);
  }

  out.model.host = g;
  out.model.field = out.base_field;
  for (const Edge& e : g.edges()) {
    if (!beta.count(e.id)) throw InputError("beta missing for edge id " + std::to_string(e.id));
    // a(x,y) = 1 + x y beta xi_u^{-x} xi_v^{-y}; the four-point log-linear
    // solve below also covers loops, where only the diagonal entries are
    // physical but the full system stays consistent.
    auto a = [&](int x, int y) {
      return 1.0 + x * y * beta.at(e.id) * std::pow(xi[static_cast<size_t>(e.u)], -x) *
                       std::pow(xi[static_cast<size_t>(e.v)], -y);
    };
    const double app = a(+1, +1), apm = a(+1, -1), amp = a(-1, +1), amm = a(-1, -1);
    if (!(app > 0) || !(apm > 0) || !(amp > 0) || !(amm > 0))
      throw DomainError("edge factor not positive on edge id " + std::to_string(e.id));
    const double j = 0.25 * std::log(app * amm / (apm * amp));
    const double hu = 0.25 * std::log(app * apm / (amp * amm));
    const double hv = 0.25 * std::log(app * amp / (apm * amm));
    const double log_b_inv = 0.25 * std::log(app * apm * amp * amm);

    out.model.coupling[e.id] = j;
    out.edge_field[e.id] = {hu, hv};
    out.edge_scale[e.id] = std::exp(-log_b_inv);
    out.model.field[static_cast<size_t>(e.u)] += hu;
    out.model.field[static_cast<size_t>(e.v)] += hv;

    for (int x : {+1, -1})
      for (int y : {+1, -1}) {
        const double rebuilt = std::exp(log_b_inv + j * x * y + hu * x + hv * y);
        out.reconstruction_residual =
            std::max(out.reconstruction_residual, std::abs(rebuilt - a(x, y)));
      }
  }
  return out;
}

BetheRatioReport verify_bethe_ratio(const Multigraph& g, const std::map<int, double>& beta,
                                    const std::vector<double>& xi, double tol,
                                    const Guards& guards) {
  const TransformOutput transform = transform_to_ising(g, beta, xi);

  BetheRatioReport report;
  report.log_z = ising_log_partition_bruteforce(transform.model, guards);
  report.log_z_bethe = 0.0;
  for (double a : transform.vertex_scale) report.log_z_bethe += std::log(a);
  for (const auto& [id, b] : transform.edge_scale) report.log_z_bethe += std::log(b);
  report.ratio = std::exp(report.log_z - report.log_z_bethe);

  WeightedInstance w;
  w.host = g;
  for (const auto& [id, b] : beta) w.beta[id] = Complex(b, 0.0);
  w.gamma.resize(static_cast<size_t>(g.vertex_count()));
  w.xi = std::vector<Complex>(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    (*w.xi)[static_cast<size_t>(v)] = Complex(xi[static_cast<size_t>(v)], 0.0);
    w.gamma[static_cast<size_t>(v)] =
        Complex(xi[static_cast<size_t>(v)] - 1.0 / xi[static_cast<size_t>(v)], 0.0);
  }
  report.theta = theta_weighted(w, guards).real();
  report.rel_error = std::abs(report.ratio - report.theta) / std::abs(report.theta);
  report.ok = report.rel_error < tol;
  return report;
}

BpResult run_belief_propagation(const IsingModel& m, const BpOptions& options) {
  validate_model(m);
  if (options.max_iters < 1) throw InputError("max_iters must be >= 1");
  if (options.damping < 0 || options.damping >= 1) throw InputError("damping must be in [0, 1)");
  if (!(options.tol > 0)) throw InputError("tol must be positive");
  const Multigraph& g = m.host;
  for (const Edge& e : g.edges())
    if (e.is_loop()) throw InputError("belief propagation requires a loop-free host");
  const int n = g.vertex_count();
  const int num_edges = g.edge_count();

  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<size_t>(n));  // (edge pos, side)
  for (int p = 0; p < num_edges; ++p) {
    const Edge& e = g.edges()[static_cast<size_t>(p)];
    incident[static_cast<size_t>(e.u)].emplace_back(p, 0);
    incident[static_cast<size_t>(e.v)].emplace_back(p, 1);
  }
  auto psi_edge = [&](int p, int x, int y) {
    return std::exp(m.coupling.at(g.edges()[static_cast<size_t>(p)].id) * x * y);
  };
  auto psi_vertex = [&](int v, int x) { return std::exp(m.field[static_cast<size_t>(v)] * x); };

  // message[p][side][state]: message flowing toward that side's endpoint.
  std::vector<std::array<std::array<double, 2>, 2>> message(
      static_cast<size_t>(num_edges), {{{0.5, 0.5}, {0.5, 0.5}}});
  auto cavity = [&](const auto& msgs, int v, int skip_pos, int state) {
    double prod = psi_vertex(v, state == 0 ? +1 : -1);
    for (const auto& [p, side] : incident[static_cast<size_t>(v)])
      if (p != skip_pos) prod *= msgs[static_cast<size_t>(p)][static_cast<size_t>(side)][static_cast<size_t>(state)];
    return prod;
  };

  BpResult result;
  auto next = message;
  for (int iter = 1; iter <= options.max_iters; ++iter) {
    double residual = 0.0;
    for (int p = 0; p < num_edges; ++p) {
      const Edge& e = g.edges()[static_cast<size_t>(p)];
      for (int side = 0; side < 2; ++side) {
        const int source = side == 0 ? e.v : e.u;
        std::array<double, 2> fresh{};
        for (int xt = 0; xt < 2; ++xt) {
          double sum = 0.0;
          for (int xs = 0; xs < 2; ++xs) {
            const int sx = xs == 0 ? +1 : -1;
            const int tx = xt == 0 ? +1 : -1;
            sum += std::exp(m.coupling.at(e.id) * sx * tx) * cavity(message, source, p, xs);
          }
          fresh[static_cast<size_t>(xt)] = sum;
        }
        const double total = fresh[0] + fresh[1];
        fresh[0] /= total;
        fresh[1] /= total;
        const auto& old = message[static_cast<size_t>(p)][static_cast<size_t>(side)];
        residual = std::max(residual, std::max(std::abs(fresh[0] - old[0]), std::abs(fresh[1] - old[1])));
        std::array<double, 2> damped{options.damping * old[0] + (1 - options.damping) * fresh[0],
                                     options.damping * old[1] + (1 - options.damping) * fresh[1]};
        const double dt = damped[0] + damped[1];
        next[static_cast<size_t>(p)][static_cast<size_t>(side)] = {damped[0] / dt, damped[1] / dt};
      }
    }
    message.swap(next);
    result.iterations = iter;
    result.residual = residual;
    if (residual < options.tol) {
      result.converged = true;
      break;
    }
  }

  // Beliefs at the (possibly unconverged) messages.
  result.beliefs.vertex.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::array<double, 2> b{cavity(message, v, -1, 0), cavity(message, v, -1, 1)};
    const double total = b[0] + b[1];
    result.beliefs.vertex[static_cast<size_t>(v)] = {b[0] / total, b[1] / total};
  }
  for (int p = 0; p < num_edges; ++p) {
    const Edge& e = g.edges()[static_cast<size_t>(p)];
    std::array<double, 4> b{};
    double total = 0.0;
    for (int si = 0; si < 2; ++si)
      for (int sj = 0; sj < 2; ++sj) {
        const double value = psi_edge(p, si == 0 ? +1 : -1, sj == 0 ? +1 : -1) *
                             cavity(message, e.u, p, si) * cavity(message, e.v, p, sj);
        b[static_cast<size_t>((si << 1) | sj)] = value;
        total += value;
      }
    for (double& x : b) x /= total;
    result.beliefs.edge[e.id] = b;
  }

  for (const Edge& e : g.edges()) {
    const auto& t = result.beliefs.edge[e.id];
    result.beliefs.max_normalization_residual = std::max(
        result.beliefs.max_normalization_residual, std::abs(t[0] + t[1] + t[2] + t[3] - 1.0));
    for (int si = 0; si < 2; ++si) {
      const double row = t[static_cast<size_t>((si << 1) | 0)] + t[static_cast<size_t>((si << 1) | 1)];
      result.beliefs.max_marginalization_residual =
          std::max(result.beliefs.max_marginalization_residual,
                   std::abs(row - result.beliefs.vertex[static_cast<size_t>(e.u)][static_cast<size_t>(si)]));
    }
    for (int sj = 0; sj < 2; ++sj) {
      const double col = t[static_cast<size_t>((0 << 1) | sj)] + t[static_cast<size_t>((1 << 1) | sj)];
      result.beliefs.max_marginalization_residual =
          std::max(result.beliefs.max_marginalization_residual,
                   std::abs(col - result.beliefs.vertex[static_cast<size_t>(e.v)][static_cast<size_t>(sj)]));
    }
  }

  // Bethe free energy at the beliefs.
  const std::vector<int> deg = g.degrees();
  double log_zb = 0.0;
  for (int p = 0; p < num_edges; ++p) {
    const Edge& e = g.edges()[static_cast<size_t>(p)];
    const auto& t = result.beliefs.edge[e.id];
    for (int si = 0; si < 2; ++si)
      for (int sj = 0; sj < 2; ++sj) {
        const double b = t[static_cast<size_t>((si << 1) | sj)];
        log_zb += b * std::log(psi_edge(p, si == 0 ? +1 : -1, sj == 0 ? +1 : -1));
        log_zb -= xlogx(b);
      }
  }
  for (int v = 0; v < n; ++v) {
    const auto& b = result.beliefs.vertex[static_cast<size_t>(v)];
    for (int s = 0; s < 2; ++s) {
      log_zb += b[static_cast<size_t>(s)] * std::log(psi_vertex(v, s == 0 ? +1 : -1));
      log_zb += (deg[static_cast<size_t>(v)] - 1) * xlogx(b[static_cast<size_t>(s)]);
    }
  }
  result.log_z_bethe = log_zb;
  return result;
}

bool van_der_waerden_check(const IsingModel& m, double rel_tol, const Guards& guards) {
  validate_model(m);
  for (double h : m.field)
    if (h != 0.0) throw InputError("zero-field expansion requires h = 0");
  check_edge_guard(m.host, guards);
  check_vertex_guard(m.host, guards);
  const Multigraph& g = m.host;

  double eulerian_sum = 0.0;
  detail::scan_subsets(g, detail::EvenDegreePolicy{},
                       [&](std::uint64_t mask, int, const std::vector<int>&) {
                         double prod = 1.0;
                         for (int p = 0; p < g.edge_count(); ++p)
                           if (mask & (std::uint64_t{1} << p))
                             prod *= std::tanh(m.coupling.at(g.edges()[static_cast<size_t>(p)].id));
                         eulerian_sum += prod;
                       });
  double log_rhs = g.vertex_count() * std::log(2.0) + std::log(eulerian_sum);
  for (const auto& [id, j] : m.coupling) log_rhs += std::log(std::cosh(j));
  const double log_lhs = ising_log_partition_bruteforce(m, guards);
  return std::abs(std::exp(log_rhs - log_lhs) - 1.0) < rel_tol;
}

bool field_expansion_check(const IsingModel& m, double rel_tol, const Guards& guards) {
  validate_model(m);
  check_edge_guard(m.host, guards);
  check_vertex_guard(m.host, guards);
  const Multigraph& g = m.host;
  const int num_edges = g.edge_count();
  const int n = g.vertex_count();

  double subset_sum = 0.0;
  std::vector<int> deg(static_cast<size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << num_edges); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    double prod = 1.0;
    for (int p = 0; p < num_edges; ++p)
      if (mask & (std::uint64_t{1} << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        prod *= std::tanh(m.coupling.at(e.id));
        deg[static_cast<size_t>(e.u)] += e.is_loop() ? 2 : 1;
        if (!e.is_loop()) deg[static_cast<size_t>(e.v)] += 1;
      }
    for (int v = 0; v < n; ++v)
      prod *= deg[static_cast<size_t>(v)] % 2 == 0 ? std::cosh(m.field[static_cast<size_t>(v)])
                                                   : std::sinh(m.field[static_cast<size_t>(v)]);
    subset_sum += prod;
  }
  double log_rhs = n * std::log(2.0) + std::log(std::abs(subset_sum));
  for (const auto& [id, j] : m.coupling) log_rhs += std::log(std::cosh(j));
  if (subset_sum <= 0.0) return false;  // Z is positive; a nonpositive sum is a mismatch
  const double log_lhs = ising_log_partition_bruteforce(m, guards);
  return std::abs(std::exp(log_rhs - log_lhs) - 1.0) < rel_tol;
}

}  // namespace grapoly
