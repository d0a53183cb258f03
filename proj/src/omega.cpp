#include "grapoly/omega.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "subset_scan.hpp"

namespace grapoly {

namespace {

UnivariatePoly one_minus_beta_poly() {
  return UnivariatePoly(Integer(1)) - UnivariatePoly::variable();
}

UnivariatePoly remove_edge_vertex_factor(UnivariatePoly p, int edges, int vertices) {
  const UnivariatePoly omb = one_minus_beta_poly();
  if (edges >= vertices) return divide_exact(p, omb.pow(static_cast<unsigned>(edges - vertices)));
  return p * omb.pow(static_cast<unsigned>(vertices - edges));
}

// Matching enumeration: loops are skipped outright, covered vertices tracked
// in a bitmask-free vector so |V| is unbounded by word size.
template <class Visit>
void scan_matchings(const Multigraph& g, Visit&& visit) {
  const int m = g.edge_count();
  std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int p) -> void {
    if (p == m) {
      visit(static_cast<const std::vector<int>&>(chosen), covered);
      return;
    }
    const Edge& e = g.edges()[static_cast<size_t>(p)];
    self(self, p + 1);
    if (!e.is_loop() && !covered[static_cast<size_t>(e.u)] && !covered[static_cast<size_t>(e.v)]) {
      covered[static_cast<size_t>(e.u)] = covered[static_cast<size_t>(e.v)] = 1;
      chosen.push_back(e.id);
      self(self, p + 1);
      chosen.pop_back();
      covered[static_cast<size_t>(e.u)] = covered[static_cast<size_t>(e.v)] = 0;
    }
  };
  rec(rec, 0);
}

// Fraction-free determinant of an integer matrix (Bareiss), with row pivoting.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                          a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                      a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                          a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;  // exact by construction
      }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  Integer det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

// Adjacency with parallel multiplicity; a loop adds 2 to its diagonal entry
// and 2 to the degree.
std::vector<std::vector<int>> adjacency_matrix(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> a(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      a[static_cast<size_t>(e.u)][static_cast<size_t>(e.u)] += 2;
    } else {
      a[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] += 1;
      a[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] += 1;
    }
  }
  return a;
}

std::vector<Rational> lagrange_interpolate(const std::vector<Rational>& xs,
                                           const std::vector<Rational>& ys) {
  const size_t n = xs.size();
  std::vector<Rational> result(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    // basis_i = prod_{j != i} (x - xs[j]) / (xs[i] - xs[j])
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    const Rational scale = ys[i] / denom;
    for (size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
  }
  return result;
}

}  // namespace

OmegaResult omega_specialize(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  const int m = g.edge_count();

  // Coefficient of beta^k accumulates (-1)^k sum over size-k subsets of
  // prod_i (1 - d_i(s)); a degree-1 vertex zeroes the term, so the
  // sub-coregraph pruning applies unchanged.
  std::vector<Integer> coeff(static_cast<size_t>(m) + 1, Integer(0));
  detail::scan_subsets(g, detail::NoDegreeOnePolicy{},
                       [&](std::uint64_t, int size, const std::vector<int>& deg) {
                         Integer prod = 1;
                         for (int d : deg)
                           if (d >= 2) prod *= Integer(1 - d);
                         coeff[static_cast<size_t>(size)] += prod;
                       });
  UnivariatePoly theta_at_2i;
  for (int k = 0; k <= m; ++k)
    theta_at_2i.add_term(k, (k % 2 == 0 ? coeff[static_cast<size_t>(k)] : -coeff[static_cast<size_t>(k)]));

  OmegaResult result;
  result.polynomial = remove_edge_vertex_factor(theta_at_2i, m, g.vertex_count());
  result.route = OmegaRoute::specialization;
  return result;
}

OmegaResult omega_vexpansion(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  const int m = g.edge_count();
  const int n = g.vertex_count();
  const UnivariatePoly omb = one_minus_beta_poly();
  std::vector<UnivariatePoly> omb_pow(static_cast<size_t>(n) + 1);
  omb_pow[0] = UnivariatePoly(Integer(1));
  for (int k = 1; k <= n; ++k) omb_pow[static_cast<size_t>(k)] = omb_pow[static_cast<size_t>(k - 1)] * omb;

  UnivariatePoly total;
  std::vector<int> parent(static_cast<size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    int size = 0;
    for (int p = 0; p < m; ++p)
      if (mask & (std::uint64_t{1} << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        const int ru = find(e.u), rv = find(e.v);
        if (ru != rv) parent[static_cast<size_t>(std::max(ru, rv))] = std::min(ru, rv);
        ++size;
      }
    std::vector<int> comp_edges(static_cast<size_t>(n), 0), comp_vertices(static_cast<size_t>(n), 0);
    for (int p = 0; p < m; ++p)
      if (mask & (std::uint64_t{1} << p))
        ++comp_edges[static_cast<size_t>(find(g.edges()[static_cast<size_t>(p)].u))];
    for (int v = 0; v < n; ++v) ++comp_vertices[static_cast<size_t>(find(v))];

    int trees = 0, unicyclic = 0;
    bool dead = false;
    for (int v = 0; v < n && !dead; ++v) {
      if (comp_vertices[static_cast<size_t>(v)] == 0) continue;
      const int nullity = comp_edges[static_cast<size_t>(v)] - comp_vertices[static_cast<size_t>(v)] + 1;
      if (nullity == 0)
        ++trees;
      else if (nullity == 1)
        ++unicyclic;
      else
        dead = true;
    }
    if (dead) continue;
    UnivariatePoly term = UnivariatePoly::monomial(size, int_pow(2, static_cast<unsigned long>(unicyclic)));
    term *= omb_pow[static_cast<size_t>(trees)];
    total += term;
  }

  OmegaResult result;
  result.polynomial = std::move(total);
  result.route = OmegaRoute::vexpansion;
  return result;
}

namespace {

UnivariatePoly omega_dc_impl(const Multigraph& g, std::map<std::string, UnivariatePoly>& memo) {
  const std::string key = g.encode();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const Edge* pivot = nullptr;
  for (const Edge& e : g.edges())
    if (!e.is_loop() && (!pivot || e.id < pivot->id)) pivot = &e;

  UnivariatePoly result;
  if (!pivot) {
    std::vector<int> loops(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) ++loops[static_cast<size_t>(e.u)];
    result = UnivariatePoly(Integer(1));
    for (int v = 0; v < g.vertex_count(); ++v) {
      UnivariatePoly bouquet_value(Integer(1));
      bouquet_value.add_term(1, Integer(2 * loops[static_cast<size_t>(v)] - 1));
      result *= bouquet_value;
    }
  } else {
    result = omega_dc_impl(g.delete_edge(pivot->id), memo) +
             UnivariatePoly::variable() * omega_dc_impl(g.contract_edge(pivot->id), memo);
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

OmegaResult omega_deletion_contraction(const Multigraph& g) {
  std::map<std::string, UnivariatePoly> memo;
  OmegaResult result;
  result.polynomial = omega_dc_impl(g, memo);
  result.route = OmegaRoute::deletion_contraction;
  return result;
}

std::vector<Integer> matching_counts(const Multigraph& g, const Guards& guards) {
  check_vertex_guard(g, guards);
  std::vector<Integer> counts(static_cast<size_t>(g.vertex_count() / 2) + 1, Integer(0));
  scan_matchings(g, [&](const std::vector<int>& chosen, const std::vector<char>&) {
    counts[chosen.size()] += 1;
  });
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

Rational monomer_dimer(const Multigraph& g, const std::map<int, Rational>& mu,
                       const std::vector<Rational>& lambda, const Guards& guards) {
  check_vertex_guard(g, guards);
  if (static_cast<int>(lambda.size()) != g.vertex_count())
    throw InputError("lambda must assign a weight to every vertex");
  for (const Edge& e : g.edges())
    if (!e.is_loop() && !mu.count(e.id))
      throw InputError("mu missing for edge id " + std::to_string(e.id));

  Rational total = 0;
  scan_matchings(g, [&](const std::vector<int>& chosen, const std::vector<char>& covered) {
    Rational term = 1;
    for (int id : chosen) term *= mu.at(id);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!covered[static_cast<size_t>(v)]) term *= lambda[static_cast<size_t>(v)];
    total += term;
  });
  return total;
}

UnivariatePoly monomer_dimer_activity(const Multigraph& g, const Guards& guards) {
  check_vertex_guard(g, guards);
  const std::vector<int> deg = g.degrees();
  std::vector<UnivariatePoly> lambda(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    lambda[static_cast<size_t>(v)] = UnivariatePoly(Integer(1));
    lambda[static_cast<size_t>(v)].add_term(1, Integer(deg[static_cast<size_t>(v)] - 1));
  }

  UnivariatePoly total;
  scan_matchings(g, [&](const std::vector<int>& chosen, const std::vector<char>& covered) {
    UnivariatePoly term = UnivariatePoly::monomial(static_cast<int>(chosen.size()),
                                                   chosen.size() % 2 == 0 ? 1 : -1);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!covered[static_cast<size_t>(v)]) term *= lambda[static_cast<size_t>(v)];
    total += term;
  });
  return total;
}

OmegaResult omega_via_monomer_dimer(const Multigraph& g, const Guards& guards) {
  OmegaResult result;
  result.polynomial = monomer_dimer_activity(g, guards);
  result.route = OmegaRoute::monomer_dimer;
  return result;
}

UnivariatePoly matching_polynomial(const Multigraph& g, const Guards& guards) {
  const std::vector<Integer> p = matching_counts(g, guards);
  UnivariatePoly alpha;
  for (size_t k = 0; k < p.size(); ++k)
    alpha.add_term(g.vertex_count() - 2 * static_cast<int>(k), k % 2 == 0 ? p[k] : -p[k]);
  return alpha;
}

int regularity(const Multigraph& g) {
  if (g.vertex_count() == 0) return -1;
  const std::vector<int> deg = g.degrees();
  for (int d : deg)
    if (d != deg[0]) return -1;
  return deg[0];
}

bool check_regular_identity(const Multigraph& g, const std::vector<Rational>& samples,
                            const Guards& guards) {
  const int d = regularity(g);
  if (d < 2) throw InputError("identity requires a (q+1)-regular graph with q >= 1");
  const int q = d - 1;
  const UnivariatePoly omega = omega_deletion_contraction(g).polynomial;
  const UnivariatePoly alpha = matching_polynomial(g, guards);
  for (const Rational& u : samples) {
    if (u == 0) throw InputError("samples must be nonzero");
    const Rational lhs = omega.eval(u * u);
    const Rational rhs = alpha.eval(1 / u + q * u) * rat_pow(u, g.vertex_count());
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_coefficient_symmetry(const Multigraph& g) {
  const int d = regularity(g);
  if (d < 2) throw InputError("symmetry requires a (q+1)-regular graph with q >= 1");
  const Integer q = d - 1;
  const int n = g.vertex_count();
  const UnivariatePoly omega = omega_deletion_contraction(g).polynomial;
  if (omega.degree() != n) return false;
  for (int k = 0; 2 * k <= n; ++k)
    if (omega.coeff(n - k) != omega.coeff(k) * int_pow(q, static_cast<unsigned long>(n - 2 * k)))
      return false;
  return true;
}

ZeroReport omega_zeros(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  const Multigraph core = g.core();
  if (core.edge_count() == 0) throw InputError("zero bounds need a nonempty core");
  const std::vector<int> core_deg = core.degrees();
  const int d_min = *std::min_element(core_deg.begin(), core_deg.end());
  const int d_max = *std::max_element(core_deg.begin(), core_deg.end());
  if (d_min < 2) throw InputError("zero bounds need core minimum degree >= 2");

  const UnivariatePoly p = omega_deletion_contraction(g).polynomial;
  const int degree = p.degree();
  if (degree < 1) throw InputError("constant polynomial has no zeros");
  std::vector<double> c(static_cast<size_t>(degree) + 1, 0.0);
  for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e)] = v.get_d();

  // Companion matrix of the monic normalization, balanced before the
  // eigensolve.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i)
    companion(i, degree - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(degree)];
  // Parlett-Reinsch style balancing with powers of two.
  for (int pass = 0; pass < 8; ++pass) {
    bool changed = false;
    for (int i = 0; i < degree; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < degree; ++j) {
        if (j == i) continue;
        row += std::abs(companion(i, j));
        col += std::abs(companion(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      double f = 1.0;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col > row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if (f != 1.0) {
        changed = true;
        for (int j = 0; j < degree; ++j) companion(i, j) /= f;
        for (int j = 0; j < degree; ++j) companion(j, i) *= f;
      }
    }
    if (!changed) break;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success) throw NumericError("companion eigensolve failed");

  const UnivariatePoly dp = p.derivative();
  const UnivariatePoly ddp = dp.derivative();

  // Coefficients are exact, so the polish evaluates with exact rational
  // complex Horner: double evaluation plateaus at sqrt(eps) distance from a
  // repeated root (disjoint unions square their factors), which is not
  // enough for the annulus tolerance.
  auto eval_exact = [](const UnivariatePoly& poly, const Rational& zr, const Rational& zi) {
    Rational ar(0), ai(0);
    for (int k = poly.degree(); k >= 0; --k) {
      const Rational next_r = ar * zr - ai * zi + poly.coeff(k);
      ai = ar * zi + ai * zr;
      ar = next_r;
    }
    return Complex(ar.get_d(), ai.get_d());
  };
  auto scale_at = [&](Complex z) {
    double scale = 0.0, zpow = 1.0;
    const double zmod = std::abs(z);
    for (size_t k = 0; k < c.size(); ++k) {
      scale += std::abs(c[k]) * zpow;
      zpow *= zmod;
    }
    return scale;
  };

  ZeroReport report;
  report.annulus_lower = 1.0 / (d_max - 1);
  report.annulus_upper = 1.0 / (d_min - 1);
  for (int i = 0; i < degree; ++i) {
    Complex z(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
    Complex value = eval_exact(p, Rational(z.real()), Rational(z.imag()));
    for (int iter = 0; iter < 12 && std::abs(value) > 0.0; ++iter) {
      const Rational zr(z.real()), zi(z.imag());
      const Complex deriv = eval_exact(dp, zr, zi);
      if (std::abs(deriv) < 1e-300) break;
      // Multiplicity-aware Newton step.
      const Complex w = value / deriv;
      const Complex denom = 1.0 - value * eval_exact(ddp, zr, zi) / (deriv * deriv);
      int mult = 1;
      if (std::isfinite(denom.real()) && std::abs(denom) > 1e-3) {
        const double estimate = (1.0 / denom).real();
        if (std::isfinite(estimate))
          mult = std::clamp(static_cast<int>(std::lround(estimate)), 1, degree);
      }
      const Complex next = z - static_cast<double>(mult) * w;
      if (next == z) break;
      z = next;
      value = eval_exact(p, Rational(z.real()), Rational(z.imag()));
    }
    const double residual = std::abs(value) / scale_at(z);
    if (residual > 1e-9)
      throw NumericError("root polishing stalled at residual " + std::to_string(residual));
    report.max_residual = std::max(report.max_residual, residual);
    report.roots.push_back(z);
  }
  std::sort(report.roots.begin(), report.roots.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  report.annulus_ok = true;
  for (const Complex& z : report.roots) {
    const double mod = std::abs(z);
    if (mod < report.annulus_lower - 1e-8 || mod > report.annulus_upper + 1e-8)
      report.annulus_ok = false;
  }
  return report;
}

void enumerate_cycle_unions(const Multigraph& g,
                            const std::function<void(const EdgeSubset&)>& visit,
                            const Guards& guards) {
  check_edge_guard(g, guards);
  detail::scan_subsets(g, detail::CycleUnionPolicy{},
                       [&](std::uint64_t mask, int, const std::vector<int>&) {
                         EdgeSubset s;
                         for (int p = 0; p < g.edge_count(); ++p)
                           if (mask & (std::uint64_t{1} << p))
                             s.ids.push_back(g.edges()[static_cast<size_t>(p)].id);
                         std::sort(s.ids.begin(), s.ids.end());
                         visit(s);
                       });
}

namespace {

// Shared by the determinant-sum evaluations: run over cycle unions, handing
// the caller the vertices outside the union and the number of cycles.
template <class Term>
void fold_cycle_unions(const Multigraph& g, Term&& term) {
  const int n = g.vertex_count();
  detail::scan_subsets(
      g, detail::CycleUnionPolicy{},
      [&](std::uint64_t mask, int size, const std::vector<int>& deg) {
        // Count cycles: components of the chosen edge set among covered
        // vertices.
        std::vector<int> parent(static_cast<size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
          }
          return x;
        };
        for (int p = 0; p < g.edge_count(); ++p)
          if (mask & (std::uint64_t{1} << p)) {
            const Edge& e = g.edges()[static_cast<size_t>(p)];
            const int ru = find(e.u), rv = find(e.v);
            if (ru != rv) parent[static_cast<size_t>(std::max(ru, rv))] = std::min(ru, rv);
          }
        std::vector<char> is_root_component(static_cast<size_t>(n), 0);
        int cycles = 0;
        std::vector<int> outside;
        for (int v = 0; v < n; ++v) {
          if (deg[static_cast<size_t>(v)] == 0) {
            outside.push_back(v);
          } else if (!is_root_component[static_cast<size_t>(find(v))]) {
            is_root_component[static_cast<size_t>(find(v))] = 1;
            ++cycles;
          }
        }
        term(outside, cycles, size);
      });
}

}  // namespace

Rational omega_determinant_sum(const Multigraph& g, const Rational& u, const Guards& guards) {
  check_edge_guard(g, guards);
  const std::vector<std::vector<int>> adj = adjacency_matrix(g);
  const std::vector<int> deg = g.degrees();

  // Clear denominators: with u = p/q, q^2 (I - u A + u^2 (D - I)) is an
  // integer matrix and each t x t principal minor picks up q^(2t).
  const Integer p_num = u.get_num();
  const Integer q_den = u.get_den();
  const Integer q2 = q_den * q_den;
  const Integer pq = p_num * q_den;
  const Integer p2 = p_num * p_num;

  Rational total = 0;
  fold_cycle_unions(g, [&](const std::vector<int>& outside, int cycles, int size) {
    const int t = static_cast<int>(outside.size());
    std::vector<std::vector<Integer>> mat(static_cast<size_t>(t),
                                          std::vector<Integer>(static_cast<size_t>(t)));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        const int vi = outside[static_cast<size_t>(i)], vj = outside[static_cast<size_t>(j)];
        Integer entry = -pq * adj[static_cast<size_t>(vi)][static_cast<size_t>(vj)];
        if (i == j) entry += q2 + p2 * (deg[static_cast<size_t>(vi)] - 1);
        mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry;
      }
    Rational term(bareiss_determinant(std::move(mat)));
    term /= Rational(int_pow(q_den, 2 * static_cast<unsigned long>(t)));
    term *= int_pow(2, static_cast<unsigned long>(cycles));
    term *= rat_pow(u, size);
    total += term;
  });
  return total;
}

OmegaResult omega_via_determinant_sum(const Multigraph& g, const Guards& guards) {
  const int degree = g.core().vertex_count();
  std::vector<Rational> xs, ys;
  xs.reserve(static_cast<size_t>(degree) + 1);
  for (int u = 1; u <= degree + 1; ++u) {
    const Rational ru(u);
    xs.push_back(ru * ru);
    ys.push_back(omega_determinant_sum(g, ru, guards));
  }
  const std::vector<Rational> coeffs = lagrange_interpolate(xs, ys);

  OmegaResult result;
  result.route = OmegaRoute::determinant_sum;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (coeffs[k].get_den() != 1)
      throw NumericError("determinant-sum interpolation produced a non-integer coefficient");
    result.polynomial.add_term(static_cast<int>(k), coeffs[k].get_num());
  }
  return result;
}

Beta2Record subcoregraph_count_expansion_beta2(const Multigraph& g, const Guards& guards) {
  const Multigraph g2 = g.subdivide(2);
  check_vertex_guard(g2, guards);
  check_edge_guard(g, guards);

  Beta2Record record;
  record.covering_matchings = 0;
  scan_matchings(g2, [&](const std::vector<int>&, const std::vector<char>& covered) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!covered[static_cast<size_t>(v)]) return;
    record.covering_matchings += 1;
  });

  // Expansion over subsets whose components all have nullity exactly one
  // (isolated vertices count as nullity-0 components and disqualify).
  const int m = g.edge_count();
  const int n = g.vertex_count();
  record.nullity_one_expansion = 0;
  std::vector<int> parent(static_cast<size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    for (int p = 0; p < m; ++p)
      if (mask & (std::uint64_t{1} << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        const int ru = find(e.u), rv = find(e.v);
        if (ru != rv) parent[static_cast<size_t>(std::max(ru, rv))] = std::min(ru, rv);
      }
    std::vector<int> comp_edges(static_cast<size_t>(n), 0), comp_vertices(static_cast<size_t>(n), 0);
    for (int p = 0; p < m; ++p)
      if (mask & (std::uint64_t{1} << p))
        ++comp_edges[static_cast<size_t>(find(g.edges()[static_cast<size_t>(p)].u))];
    for (int v = 0; v < n; ++v) ++comp_vertices[static_cast<size_t>(find(v))];
    int components = 0;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (comp_vertices[static_cast<size_t>(v)] == 0) continue;
      ++components;
      if (comp_edges[static_cast<size_t>(v)] - comp_vertices[static_cast<size_t>(v)] + 1 != 1) ok = false;
    }
    if (ok) record.nullity_one_expansion += int_pow(2, static_cast<unsigned long>(components));
  }

  const Rational at_one = omega_deletion_contraction(g).polynomial.eval(Rational(1));
  record.omega_at_one = at_one.get_num();
  record.consistent = record.covering_matchings == record.omega_at_one &&
                      record.nullity_one_expansion == record.omega_at_one;
  return record;
}

OmegaAtOneReport omega_at_one_identities(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  check_vertex_guard(g, guards);
  OmegaAtOneReport report;
  report.omega_at_one = omega_deletion_contraction(g).polynomial.eval(Rational(1)).get_num();

  const std::vector<int> deg = g.degrees();
  report.signed_matching_sum = 0;
  scan_matchings(g, [&](const std::vector<int>& chosen, const std::vector<char>& covered) {
    Integer term = chosen.size() % 2 == 0 ? 1 : -1;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!covered[static_cast<size_t>(v)]) term *= deg[static_cast<size_t>(v)];
    report.signed_matching_sum += term;
  });

  const std::vector<std::vector<int>> adj = adjacency_matrix(g);
  report.determinant_form = 0;
  fold_cycle_unions(g, [&](const std::vector<int>& outside, int cycles, int) {
    const int t = static_cast<int>(outside.size());
    std::vector<std::vector<Integer>> mat(static_cast<size_t>(t),
                                          std::vector<Integer>(static_cast<size_t>(t)));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        const int vi = outside[static_cast<size_t>(i)], vj = outside[static_cast<size_t>(j)];
        Integer entry = -Integer(adj[static_cast<size_t>(vi)][static_cast<size_t>(vj)]);
        if (i == j) entry += deg[static_cast<size_t>(vi)];
        mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry;
      }
    report.determinant_form +=
        int_pow(2, static_cast<unsigned long>(cycles)) * bareiss_determinant(std::move(mat));
  });

  report.dc_at_one_holds = true;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const Integer left =
        omega_deletion_contraction(g.delete_edge(e.id)).polynomial.eval(Rational(1)).get_num();
    const Integer right =
        omega_deletion_contraction(g.contract_edge(e.id)).polynomial.eval(Rational(1)).get_num();
    if (left + right != report.omega_at_one) {
      report.dc_at_one_holds = false;
      break;
    }
  }

  report.all_ok = report.signed_matching_sum == report.omega_at_one &&
                  report.determinant_form == report.omega_at_one && report.dc_at_one_holds;
  return report;
}

NonnegativityReport check_nonnegativity(const Multigraph& g) {
  NonnegativityReport report;
  const ComponentProfile profile = component_profile(g, g.full_edge_set());
  for (const auto& comp : profile.components)
    if (comp.nullity == 0) {
      report.applies = false;
      report.ok = true;  // vacuous
      return report;
    }
  report.applies = true;
  report.ok = true;
  const UnivariatePoly omega = omega_deletion_contraction(g).polynomial;
  for (const auto& [e, c] : omega.terms())
    if (c < 0) report.ok = false;
  return report;
}

bool check_subdivision_law(const Multigraph& g, int m, const Guards& guards) {
  if (m < 1) throw InputError("subdivision factor must be >= 1");
  check_edge_guard(g, guards);
  const UnivariatePoly lhs = omega_deletion_contraction(g.subdivide(m)).polynomial;
  const UnivariatePoly stretched = omega_deletion_contraction(g).polynomial.stretch(m);
  UnivariatePoly geometric;  // 1 + beta + ... + beta^(m-1)
  for (int k = 0; k < m; ++k) geometric.add_term(k, 1);
  const int excess = g.edge_count() - g.vertex_count();
  if (excess >= 0)
    return lhs == geometric.pow(static_cast<unsigned>(excess)) * stretched;
  return lhs * geometric.pow(static_cast<unsigned>(-excess)) == stretched;
}

}  // namespace grapoly
