#include "grapoly/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "subset_scan.hpp"

namespace grapoly {

namespace {

constexpr double kXiDegeneracyTol = 1e-12;

// Union-find over a fixed vertex range, reset per subset.
int count_components(int n, const std::vector<std::pair<int, int>>& joins, std::vector<int>& parent) {
  parent.resize(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  int k = n;
  for (const auto& [a, b] : joins) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
      --k;
    }
  }
  return k;
}

BivariatePoly one_minus_beta() {
  return BivariatePoly(Integer(1)) - BivariatePoly::first_variable();
}

}  // namespace

void check_edge_guard(const Multigraph& g, const Guards& guards) {
  if (g.edge_count() > guards.max_edges)
    throw GuardError("graph has " + std::to_string(g.edge_count()) +
                     " edges, enumeration guard is " + std::to_string(guards.max_edges));
}

void check_vertex_guard(const Multigraph& g, const Guards& guards) {
  if (g.vertex_count() > guards.max_vertices)
    throw GuardError("graph has " + std::to_string(g.vertex_count()) +
                     " vertices, state-sum guard is " + std::to_string(guards.max_vertices));
}

GraphStats graph_stats(const Multigraph& g) {
  GraphStats s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  s.components = g.component_count();
  s.nullity = g.nullity();
  return s;
}

void validate_weights(const WeightedInstance& w) {
  if (static_cast<int>(w.gamma.size()) != w.host.vertex_count())
    throw InputError("gamma must assign a weight to every vertex");
  for (const Edge& e : w.host.edges())
    if (!w.beta.count(e.id)) throw InputError("beta missing for edge id " + std::to_string(e.id));
  if (w.xi) {
    if (static_cast<int>(w.xi->size()) != w.host.vertex_count())
      throw InputError("xi must assign a value to every vertex");
    for (int v = 0; v < w.host.vertex_count(); ++v) {
      const Complex xi = (*w.xi)[static_cast<size_t>(v)];
      if (std::abs(xi) < kXiDegeneracyTol)
        throw DomainError("xi is degenerate at vertex " + std::to_string(v));
      if (std::abs(w.gamma[static_cast<size_t>(v)] - (xi - 1.0 / xi)) > 1e-12)
        throw InputError("gamma and xi disagree at vertex " + std::to_string(v));
    }
  }
}

WeightedInstance uniform_weights(const Multigraph& g, Complex beta, Complex gamma) {
  WeightedInstance w;
  w.host = g;
  for (const Edge& e : g.edges()) w.beta[e.id] = beta;
  w.gamma.assign(static_cast<size_t>(g.vertex_count()), gamma);
  return w;
}

WeightedInstance weighted_delete(const WeightedInstance& w, int edge_id) {
  WeightedInstance out = w;
  out.host = w.host.delete_edge(edge_id);
  out.beta.erase(edge_id);
  return out;
}

WeightedInstance weighted_contract(const WeightedInstance& w, int edge_id) {
  const Edge& e = w.host.edge_by_id(edge_id);
  if (!e.is_loop() &&
      std::abs(w.gamma[static_cast<size_t>(e.u)] - w.gamma[static_cast<size_t>(e.v)]) > 1e-12)
    throw DomainError("contraction needs equal gamma on the endpoints of edge " +
                      std::to_string(edge_id));
  std::vector<int> vmap;
  WeightedInstance out;
  out.host = w.host.contract_edge(edge_id, &vmap);
  out.beta = w.beta;
  out.beta.erase(edge_id);
  out.gamma.assign(static_cast<size_t>(out.host.vertex_count()), Complex(0));
  for (int v = 0; v < w.host.vertex_count(); ++v)
    out.gamma[static_cast<size_t>(vmap[static_cast<size_t>(v)])] = w.gamma[static_cast<size_t>(v)];
  if (w.xi) {
    std::vector<Complex> xi(static_cast<size_t>(out.host.vertex_count()), Complex(0));
    for (int v = 0; v < w.host.vertex_count(); ++v)
      xi[static_cast<size_t>(vmap[static_cast<size_t>(v)])] = (*w.xi)[static_cast<size_t>(v)];
    out.xi = std::move(xi);
  }
  return out;
}

ThetaResult theta_enumerate(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  const int m = g.edge_count();
  const std::vector<UnivariatePoly> f = f_family(2 * m);

  // gamma-polynomials bucketed by subset size; assembled into powers of the
  // activity variable at the end.
  std::vector<UnivariatePoly> by_size(static_cast<size_t>(m) + 1);
  detail::scan_subsets(g, detail::NoDegreeOnePolicy{},
                       [&](std::uint64_t, int size, const std::vector<int>& deg) {
                         UnivariatePoly prod(Integer(1));
                         for (int d : deg)
                           if (d >= 3) prod *= f[static_cast<size_t>(d)];
                         by_size[static_cast<size_t>(size)] += prod;
                       });

  ThetaResult result;
  result.algorithm = ThetaAlgorithm::enumeration;
  result.stats = graph_stats(g);
  for (int k = 0; k <= m; ++k)
    for (const auto& [e, c] : by_size[static_cast<size_t>(k)].terms())
      result.polynomial.add_term(k, e, c);
  return result;
}

BivariatePoly theta_bouquet(int n) {
  if (n < 0) throw InputError("bouquet size must be >= 0");
  const std::vector<UnivariatePoly> f = f_family(2 * n);
  BivariatePoly theta;
  for (int k = 0; k <= n; ++k) {
    const Integer c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    for (const auto& [e, fc] : f[static_cast<size_t>(2 * k)].terms()) theta.add_term(k, e, c * fc);
  }
  return theta;
}

UnivariatePoly theta_bouquet_at_one(int n) {
  if (n < 0) throw InputError("bouquet size must be >= 0");
  const std::vector<UnivariatePoly> f = f_family(2 * n);
  UnivariatePoly p;
  for (int k = 0; k <= n; ++k) {
    UnivariatePoly term = f[static_cast<size_t>(2 * k)];
    term *= binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    p += term;
  }
  return p;
}

namespace {

BivariatePoly theta_dc_impl(const Multigraph& g, std::map<std::string, BivariatePoly>& memo) {
  const std::string key = g.encode();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Pivot: lowest-id non-loop edge; none left means a disjoint union of
  // bouquets plus isolated vertices.
  const Edge* pivot = nullptr;
  for (const Edge& e : g.edges())
    if (!e.is_loop() && (!pivot || e.id < pivot->id)) pivot = &e;

  BivariatePoly result;
  if (!pivot) {
    std::vector<int> loops(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) ++loops[static_cast<size_t>(e.u)];
    result = BivariatePoly(Integer(1));
    for (int v = 0; v < g.vertex_count(); ++v)
      if (loops[static_cast<size_t>(v)] > 0) result *= theta_bouquet(loops[static_cast<size_t>(v)]);
  } else {
    const BivariatePoly beta = BivariatePoly::first_variable();
    result = one_minus_beta() * theta_dc_impl(g.delete_edge(pivot->id), memo) +
             beta * theta_dc_impl(g.contract_edge(pivot->id), memo);
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

ThetaResult theta_deletion_contraction(const Multigraph& g) {
  std::map<std::string, BivariatePoly> memo;
  ThetaResult result;
  result.polynomial = theta_dc_impl(g, memo);
  result.algorithm = ThetaAlgorithm::deletion_contraction;
  result.stats = graph_stats(g);
  return result;
}

ThetaResult theta_vfunction_expansion(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  const int m = g.edge_count();
  const int n = g.vertex_count();

  std::vector<UnivariatePoly> bouquet_at_one(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) bouquet_at_one[static_cast<size_t>(i)] = theta_bouquet_at_one(i);

  std::vector<UnivariatePoly> by_size(static_cast<size_t>(m) + 1);
  std::vector<int> parent;
  std::vector<std::pair<int, int>> joins;
  std::vector<int> comp_edges(static_cast<size_t>(n), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    joins.clear();
    int size = 0;
    for (int p = 0; p < m; ++p)
      if (mask & (std::uint64_t{1} << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        joins.emplace_back(e.u, e.v);
        ++size;
      }
    count_components(n, joins, parent);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
      return x;
    };
    std::fill(comp_edges.begin(), comp_edges.end(), 0);
    for (const auto& [a, b] : joins) ++comp_edges[static_cast<size_t>(find(a))];
    std::vector<int> comp_vertices(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++comp_vertices[static_cast<size_t>(find(v))];

    UnivariatePoly prod(Integer(1));
    for (int v = 0; v < n; ++v) {
      if (comp_vertices[static_cast<size_t>(v)] == 0) continue;  // not a root
      const int nullity = comp_edges[static_cast<size_t>(v)] - comp_vertices[static_cast<size_t>(v)] + 1;
      if (nullity > 0) prod *= bouquet_at_one[static_cast<size_t>(nullity)];
    }
    by_size[static_cast<size_t>(size)] += prod;
  }

  const BivariatePoly omb = one_minus_beta();
  std::vector<BivariatePoly> omb_pow(static_cast<size_t>(m) + 1);
  omb_pow[0] = BivariatePoly(Integer(1));
  for (int k = 1; k <= m; ++k) omb_pow[static_cast<size_t>(k)] = omb_pow[static_cast<size_t>(k - 1)] * omb;

  ThetaResult result;
  result.algorithm = ThetaAlgorithm::vfunction_expansion;
  result.stats = graph_stats(g);
  for (int k = 0; k <= m; ++k) {
    if (by_size[static_cast<size_t>(k)].is_zero()) continue;
    BivariatePoly term = BivariatePoly::from_second(by_size[static_cast<size_t>(k)]);
    term *= BivariatePoly::monomial(k, 0, 1);
    term *= omb_pow[static_cast<size_t>(m - k)];
    result.polynomial += term;
  }
  return result;
}

namespace {

// f_0..f_max evaluated at a fixed complex point.
std::vector<Complex> f_values_at(Complex x, int max_n) {
  std::vector<Complex> f(static_cast<size_t>(max_n) + 1);
  f[0] = 1.0;
  if (max_n >= 1) f[1] = 0.0;
  for (int k = 2; k <= max_n; ++k) f[static_cast<size_t>(k)] = x * f[static_cast<size_t>(k - 1)] + f[static_cast<size_t>(k - 2)];
  return f;
}

}  // namespace

Complex theta_weighted(const WeightedInstance& w, const Guards& guards) {
  validate_weights(w);
  check_edge_guard(w.host, guards);
  const Multigraph& g = w.host;
  const int m = g.edge_count();

  std::vector<int> max_deg = g.degrees();
  std::vector<std::vector<Complex>> f_table(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    f_table[static_cast<size_t>(v)] =
        f_values_at(w.gamma[static_cast<size_t>(v)], std::max(2, max_deg[static_cast<size_t>(v)]));
  std::vector<Complex> beta_by_pos(static_cast<size_t>(m));
  for (int p = 0; p < m; ++p)
    beta_by_pos[static_cast<size_t>(p)] = w.beta.at(g.edges()[static_cast<size_t>(p)].id);

  Complex total = 0.0;
  detail::scan_subsets(g, detail::NoDegreeOnePolicy{},
                       [&](std::uint64_t mask, int, const std::vector<int>& deg) {
                         Complex term = 1.0;
                         for (int p = 0; p < m; ++p)
                           if (mask & (std::uint64_t{1} << p)) term *= beta_by_pos[static_cast<size_t>(p)];
                         for (int v = 0; v < g.vertex_count(); ++v)
                           if (deg[static_cast<size_t>(v)] >= 3)
                             term *= f_table[static_cast<size_t>(v)][static_cast<size_t>(deg[static_cast<size_t>(v)])];
                         total += term;
                       });
  return total;
}

Complex theta_weighted_vertex_sum(const WeightedInstance& w, const Guards& guards) {
  validate_weights(w);
  if (!w.xi) throw InputError("vertex state sum requires xi");
  check_vertex_guard(w.host, guards);
  const Multigraph& g = w.host;
  const int n = g.vertex_count();

  std::vector<Complex> xi_pos(static_cast<size_t>(n)), xi_neg(static_cast<size_t>(n));
  std::vector<Complex> norm(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    const Complex xi = (*w.xi)[static_cast<size_t>(v)];
    const Complex denom = xi + 1.0 / xi;
    if (std::abs(denom) < kXiDegeneracyTol)
      throw DomainError("xi + 1/xi vanishes at vertex " + std::to_string(v));
    xi_pos[static_cast<size_t>(v)] = xi;
    xi_neg[static_cast<size_t>(v)] = 1.0 / xi;
    norm[static_cast<size_t>(v)] = denom;
  }

  Complex total = 0.0;
  for (std::uint64_t spins = 0; spins < (std::uint64_t{1} << n); ++spins) {
    // bit set -> spin -1
    auto spin = [&](int v) { return (spins >> v) & 1u ? -1 : +1; };
    Complex term = 1.0;
    for (const Edge& e : g.edges()) {
      const int xu = spin(e.u), xv = spin(e.v);
      const Complex fu = xu > 0 ? xi_neg[static_cast<size_t>(e.u)] : xi_pos[static_cast<size_t>(e.u)];
      const Complex fv = xv > 0 ? xi_neg[static_cast<size_t>(e.v)] : xi_pos[static_cast<size_t>(e.v)];
      term *= 1.0 + static_cast<double>(xu * xv) * w.beta.at(e.id) * fu * fv;
    }
    for (int v = 0; v < n; ++v) {
      term *= (spin(v) > 0 ? xi_pos[static_cast<size_t>(v)] : xi_neg[static_cast<size_t>(v)]) /
              norm[static_cast<size_t>(v)];
    }
    total += term;
  }
  return total;
}

Complex theta_weighted_expansion(const WeightedInstance& w, const Guards& guards) {
  validate_weights(w);
  check_edge_guard(w.host, guards);
  const Multigraph& g = w.host;
  const int m = g.edge_count();
  const int n = g.vertex_count();
  for (int v = 1; v < n; ++v)
    if (std::abs(w.gamma[static_cast<size_t>(v)] - w.gamma[0]) > 1e-12)
      throw InputError("expansion form requires uniform gamma");
  const Complex gamma = n > 0 ? w.gamma[0] : Complex(0);

  std::vector<Complex> bouquet_at_one(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i)
    bouquet_at_one[static_cast<size_t>(i)] = theta_bouquet_at_one(i).eval(gamma);
  std::vector<Complex> beta_by_pos(static_cast<size_t>(m));
  for (int p = 0; p < m; ++p)
    beta_by_pos[static_cast<size_t>(p)] = w.beta.at(g.edges()[static_cast<size_t>(p)].id);

  Complex total = 0.0;
  std::vector<int> parent;
  std::vector<std::pair<int, int>> joins;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    joins.clear();
    Complex weight = 1.0;
    for (int p = 0; p < m; ++p) {
      if (mask & (std::uint64_t{1} << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        joins.emplace_back(e.u, e.v);
        weight *= beta_by_pos[static_cast<size_t>(p)];
      } else {
        weight *= 1.0 - beta_by_pos[static_cast<size_t>(p)];
      }
    }
    count_components(n, joins, parent);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
      return x;
    };
    std::vector<int> comp_edges(static_cast<size_t>(n), 0), comp_vertices(static_cast<size_t>(n), 0);
    for (const auto& [a, b] : joins) ++comp_edges[static_cast<size_t>(find(a))];
    for (int v = 0; v < n; ++v) ++comp_vertices[static_cast<size_t>(find(v))];
    for (int v = 0; v < n; ++v) {
      if (comp_vertices[static_cast<size_t>(v)] == 0) continue;
      const int nullity = comp_edges[static_cast<size_t>(v)] - comp_vertices[static_cast<size_t>(v)] + 1;
      if (nullity > 0) weight *= bouquet_at_one[static_cast<size_t>(nullity)];
    }
    total += weight;
  }
  return total;
}

BivariatePoly tutte_polynomial(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  const int m = g.edge_count();
  const int n = g.vertex_count();
  const int rank_g = g.rank();

  // Count subsets by (rank deficit, nullity); expand the binomials once.
  std::map<std::pair<int, int>, Integer> counts;
  std::vector<int> parent;
  std::vector<std::pair<int, int>> joins;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    joins.clear();
    int size = 0;
    for (int p = 0; p < m; ++p)
      if (mask & (std::uint64_t{1} << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        joins.emplace_back(e.u, e.v);
        ++size;
      }
    const int k = count_components(n, joins, parent);
    const int rank_s = n - k;
    counts[{rank_g - rank_s, size - rank_s}] += 1;
  }

  BivariatePoly t;
  for (const auto& [key, count] : counts) {
    const auto [a, b] = key;
    for (int j = 0; j <= a; ++j) {
      const Integer xj = binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(j)) *
                         ((a - j) % 2 == 0 ? 1 : -1);
      for (int k = 0; k <= b; ++k) {
        const Integer yk = binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(k)) *
                           ((b - k) % 2 == 0 ? 1 : -1);
        t.add_term(j, k, count * xj * yk);
      }
    }
  }
  return t;
}

bool check_gamma0_specialization(const Multigraph& g, const Guards& guards) {
  const BivariatePoly t = tutte_polynomial(g, guards);
  const UnivariatePoly theta0 = theta_deletion_contraction(g).polynomial.substitute_second(0);

  const int dx = std::max(0, t.degree_first());
  const int dy = std::max(0, t.degree_second());
  const UnivariatePoly beta = UnivariatePoly::variable();
  const UnivariatePoly one(Integer(1));
  const UnivariatePoly one_minus = one - beta;
  const UnivariatePoly one_plus = one + beta;

  // A = beta^dx (1-beta)^dy T(1/beta, (1+beta)/(1-beta)) with denominators
  // cleared.
  UnivariatePoly cleared;
  for (const auto& [key, c] : t.terms()) {
    const auto [j, k] = key;
    UnivariatePoly term = UnivariatePoly::monomial(dx - j, c);
    term *= one_plus.pow(static_cast<unsigned>(k));
    term *= one_minus.pow(static_cast<unsigned>(dy - k));
    cleared += term;
  }
  UnivariatePoly lhs = theta0 * UnivariatePoly::monomial(dx, 1) *
                       one_minus.pow(static_cast<unsigned>(dy));
  UnivariatePoly rhs = cleared * UnivariatePoly::monomial(g.rank(), 1) *
                       one_minus.pow(static_cast<unsigned>(g.nullity()));
  return lhs == rhs;
}

BivariatePoly random_cluster(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  const int m = g.edge_count();
  const int n = g.vertex_count();

  std::map<std::pair<int, int>, Integer> counts;  // (k(s), |s|) -> multiplicity
  std::vector<int> parent;
  std::vector<std::pair<int, int>> joins;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    joins.clear();
    int size = 0;
    for (int p = 0; p < m; ++p)
      if (mask & (std::uint64_t{1} << p)) {
        const Edge& e = g.edges()[static_cast<size_t>(p)];
        joins.emplace_back(e.u, e.v);
        ++size;
      }
    counts[{count_components(n, joins, parent), size}] += 1;
  }

  const UnivariatePoly beta = UnivariatePoly::variable();
  const UnivariatePoly one_minus = UnivariatePoly(Integer(1)) - beta;
  BivariatePoly r;
  for (const auto& [key, count] : counts) {
    const auto [k, size] = key;
    UnivariatePoly beta_part = UnivariatePoly::monomial(size, count);
    beta_part *= one_minus.pow(static_cast<unsigned>(m - size));
    for (const auto& [e, c] : beta_part.terms()) r.add_term(e, k, c);
  }
  return r;
}

Rational theta_beta1_closed_form(const Multigraph& g, const Rational& xi) {
  if (!g.is_connected()) throw InputError("closed form at activity 1 requires a connected graph");
  if (xi == 0) throw InputError("xi must be nonzero");
  const int n = g.nullity();
  const Rational sum = xi + 1 / xi;
  return rat_pow(sum, n - 1) * (rat_pow(xi, 1 - n) + rat_pow(xi, n - 1));
}

std::vector<Integer> theta_beta1_coefficients(int n) {
  if (n < 1) throw InputError("coefficient formula requires nullity >= 1");
  std::vector<Integer> c(static_cast<size_t>(n));
  c[0] = int_pow(2, static_cast<unsigned long>(n));
  for (int l = 1; l < n; ++l) {
    Integer sum = 0;
    for (int k = l + 1; k <= n; ++k)
      sum += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
             binomial(static_cast<unsigned long>(k + l - 1), static_cast<unsigned long>(2 * l));
    c[static_cast<size_t>(l)] = sum;
  }
  return c;
}

UnivariatePoly theta_beta1_gamma_poly(const Multigraph& g) {
  if (!g.is_connected()) throw InputError("activity-1 form requires a connected graph");
  return theta_bouquet_at_one(g.nullity());
}

Integer subcoregraph_count(const Multigraph& g, const Guards& guards) {
  check_edge_guard(g, guards);
  Integer count = 0;
  detail::scan_subsets(g, detail::NoDegreeOnePolicy{},
                       [&](std::uint64_t, int, const std::vector<int>&) { ++count; });
  return count;
}

void enumerate_subcoregraphs(const Multigraph& g,
                             const std::function<void(const EdgeSubset&)>& visit,
                             const Guards& guards) {
  check_edge_guard(g, guards);
  detail::scan_subsets(g, detail::NoDegreeOnePolicy{},
                       [&](std::uint64_t mask, int, const std::vector<int>&) {
                         EdgeSubset s;
                         for (int p = 0; p < g.edge_count(); ++p)
                           if (mask & (std::uint64_t{1} << p))
                             s.ids.push_back(g.edges()[static_cast<size_t>(p)].id);
                         std::sort(s.ids.begin(), s.ids.end());
                         visit(s);
                       });
}

Integer subcoregraph_lower_bound(int nullity) {
  if (nullity < 0) throw InputError("nullity must be >= 0");
  return int_pow(2, static_cast<unsigned long>(nullity));
}

Integer subcoregraph_upper_bound(int nullity) {
  if (nullity < 0) throw InputError("nullity must be >= 0");
  // a^(n-1) + b^(n-1) for the roots a, b of z^2 - 5z + 5: integer-valued via
  // the recurrence L_m = 5 (L_{m-1} - L_{m-2}), L_0 = 2, L_1 = 5, L_{-1} = 1.
  if (nullity == 0) return 1;
  Integer prev = 2, cur = 5;  // L_0, L_1
  if (nullity == 1) return prev;
  for (int m = 2; m <= nullity - 1; ++m) {
    Integer next = 5 * (cur - prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::map<int, Integer> count_by_degree3_vertices(const Multigraph& g, const Guards& guards) {
  if (!g.is_connected()) throw InputError("degree-3 refinement requires a connected graph");
  if (g.nullity() < 1) throw InputError("degree-3 refinement requires a non-tree");
  const Multigraph core = g.core();
  for (int d : core.degrees())
    if (d > 3) throw InputError("degree-3 refinement requires core degrees <= 3");
  check_edge_guard(g, guards);

  std::map<int, Integer> counts;
  for (int l = 0; l < g.nullity(); ++l) counts[l] = 0;
  detail::scan_subsets(g, detail::NoDegreeOnePolicy{},
                       [&](std::uint64_t, int, const std::vector<int>& deg) {
                         const int deg3 =
                             static_cast<int>(std::count(deg.begin(), deg.end(), 3));
                         counts[deg3 / 2] += 1;
                       });
  return counts;
}

}  // namespace grapoly
