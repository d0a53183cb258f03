#include "grapoly/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace grapoly {

namespace {

// Small union-find over vertex indices.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::map<int, int> ComponentProfile::nullity_histogram() const {
  std::map<int, int> h;
  for (const auto& c : components) ++h[c.nullity];
  return h;
}

int ComponentProfile::max_nullity() const {
  int m = 0;
  for (const auto& c : components) m = std::max(m, c.nullity);
  return m;
}

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InputError("vertex count must be non-negative");
}

const Edge& Multigraph::edge_by_id(int id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return e;
  throw InputError("unknown edge id " + std::to_string(id));
}

bool Multigraph::has_edge(int id) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
}

int Multigraph::add_vertex() { return vertex_count_++; }

int Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw InputError("edge endpoint out of range");
  edges_.push_back({next_edge_id_, u, v});
  return next_edge_id_++;
}

int Multigraph::degree(int v) const {
  if (v < 0 || v >= vertex_count_) throw InputError("vertex index out of range");
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(static_cast<size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++d[static_cast<size_t>(e.u)];
    ++d[static_cast<size_t>(e.v)];
  }
  return d;
}

int Multigraph::component_count() const {
  if (vertex_count_ == 0) return 0;
  UnionFind uf(vertex_count_);
  for (const Edge& e : edges_) uf.unite(e.u, e.v);
  int k = 0;
  for (int v = 0; v < vertex_count_; ++v)
    if (uf.find(v) == v) ++k;
  return k;
}

Multigraph Multigraph::delete_edge(int id) const {
  if (!has_edge(id)) throw InputError("unknown edge id " + std::to_string(id));
  Multigraph g = *this;
  std::erase_if(g.edges_, [&](const Edge& e) { return e.id == id; });
  return g;
}

Multigraph Multigraph::contract_edge(int id, std::vector<int>* vertex_map) const {
  const Edge& e = edge_by_id(id);
  if (e.is_loop()) {
    if (vertex_map) {
      vertex_map->resize(static_cast<size_t>(vertex_count_));
      std::iota(vertex_map->begin(), vertex_map->end(), 0);
    }
    return delete_edge(id);
  }
  const int keep = std::min(e.u, e.v);
  const int drop = std::max(e.u, e.v);
  std::vector<int> remap(static_cast<size_t>(vertex_count_));
  for (int v = 0; v < vertex_count_; ++v)
    remap[static_cast<size_t>(v)] = v == drop ? keep : (v > drop ? v - 1 : v);
  Multigraph g(vertex_count_ - 1);
  g.next_edge_id_ = next_edge_id_;
  for (const Edge& other : edges_) {
    if (other.id == id) continue;
    g.edges_.push_back({other.id, remap[static_cast<size_t>(other.u)],
                        remap[static_cast<size_t>(other.v)]});
  }
  if (vertex_map) *vertex_map = std::move(remap);
  return g;
}

Multigraph Multigraph::core() const {
  std::vector<bool> vertex_alive(static_cast<size_t>(vertex_count_), true);
  std::vector<bool> edge_alive(edges_.size(), true);
  std::vector<int> deg = degrees();

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < vertex_count_; ++v) {
      if (!vertex_alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] != 1) continue;
      // Remove v and its single incident edge.
      for (size_t i = 0; i < edges_.size(); ++i) {
        if (!edge_alive[i]) continue;
        const Edge& e = edges_[i];
        if (e.u != v && e.v != v) continue;
        edge_alive[i] = false;
        --deg[static_cast<size_t>(e.u)];
        --deg[static_cast<size_t>(e.v)];
        break;
      }
      vertex_alive[static_cast<size_t>(v)] = false;
      changed = true;
    }
  }

  std::vector<int> remap(static_cast<size_t>(vertex_count_), -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v)
    if (vertex_alive[static_cast<size_t>(v)]) remap[static_cast<size_t>(v)] = next++;
  Multigraph g(next);
  g.next_edge_id_ = next_edge_id_;
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (!edge_alive[i]) continue;
    const Edge& e = edges_[i];
    g.edges_.push_back({e.id, remap[static_cast<size_t>(e.u)], remap[static_cast<size_t>(e.v)]});
  }
  return g;
}

Multigraph Multigraph::subdivide(int m) const {
  if (m < 1) throw InputError("subdivide requires m >= 1");
  if (m == 1) return *this;
  Multigraph g(vertex_count_);
  for (const Edge& e : edges_) {
    int prev = e.u;
    for (int step = 1; step < m; ++step) {
      const int mid = g.add_vertex();
      g.add_edge(prev, mid);
      prev = mid;
    }
    g.add_edge(prev, e.v);
  }
  return g;
}

EdgeSubset Multigraph::full_edge_set() const {
  EdgeSubset s;
  s.ids.reserve(edges_.size());
  for (const Edge& e : edges_) s.ids.push_back(e.id);
  std::sort(s.ids.begin(), s.ids.end());
  return s;
}

std::string Multigraph::encode() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  std::string key = std::to_string(vertex_count_);
  for (const auto& [u, v] : pairs) {
    key += ';';
    key += std::to_string(u);
    key += ',';
    key += std::to_string(v);
  }
  return key;
}

bool Multigraph::operator==(const Multigraph& o) const {
  if (vertex_count_ != o.vertex_count_ || edges_.size() != o.edges_.size()) return false;
  return encode() == o.encode();
}

ComponentProfile component_profile(const Multigraph& g, const EdgeSubset& s) {
  UnionFind uf(g.vertex_count());
  std::vector<const Edge*> members;
  members.reserve(s.ids.size());
  for (int id : s.ids) {
    const Edge& e = g.edge_by_id(id);
    members.push_back(&e);
    uf.unite(e.u, e.v);
  }
  std::map<int, ComponentRecord> by_root;
  for (int v = 0; v < g.vertex_count(); ++v)
    by_root[uf.find(v)].vertex_ids.push_back(v);
  for (const Edge* e : members) by_root[uf.find(e->u)].edge_ids.push_back(e->id);

  ComponentProfile profile;
  for (auto& [root, rec] : by_root) {
    rec.nullity =
        static_cast<int>(rec.edge_ids.size()) - static_cast<int>(rec.vertex_ids.size()) + 1;
    profile.components.push_back(std::move(rec));
  }
  return profile;
}

Multigraph bouquet(int n) {
  if (n < 0) throw InputError("bouquet requires n >= 0");
  Multigraph g(1);
  for (int i = 0; i < n; ++i) g.add_edge(0, 0);
  return g;
}

Multigraph cycle(int n) {
  if (n < 1) throw InputError("cycle requires n >= 1");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph complete(int n) {
  if (n < 0) throw InputError("complete requires n >= 0");
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph path(int n) {
  if (n < 1) throw InputError("path requires n >= 1");
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  Multigraph g(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  const int off = a.vertex_count();
  for (const Edge& e : b.edges()) g.add_edge(e.u + off, e.v + off);
  return g;
}

namespace {

bool parse_int(std::string_view token, int& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Multigraph from_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, tokens)
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string stripped(line);
    std::istringstream in(stripped);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
      if (tok.front() == '#') break;
      tokens.push_back(tok);
    }
    if (!tokens.empty()) rows.emplace_back(line_no, std::move(tokens));
  }

  if (rows.empty()) throw InputError("line 1: missing header 'N M'");
  const auto& [header_line, header] = rows.front();
  int n = 0, m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m))
    throw InputError("line " + std::to_string(header_line) + ": expected header 'N M'");
  if (n < 0 || m < 0)
    throw InputError("line " + std::to_string(header_line) + ": N and M must be non-negative");
  if (static_cast<int>(rows.size()) - 1 < m) {
    throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                     " edge lines, found " + std::to_string(rows.size() - 1));
  }
  if (static_cast<int>(rows.size()) - 1 > m) {
    const auto& extra = rows[static_cast<size_t>(m) + 1];
    throw InputError("line " + std::to_string(extra.first) + ": unexpected data after " +
                     std::to_string(m) + " edges");
  }

  Multigraph g(n);
  for (int i = 0; i < m; ++i) {
    const auto& [ln, tokens] = rows[static_cast<size_t>(i) + 1];
    int u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      throw InputError("line " + std::to_string(ln) + ": expected edge 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("line " + std::to_string(ln) + ": endpoint out of range [0, " +
                       std::to_string(n) + ")");
    g.add_edge(u, v);
  }
  return g;
}

std::string to_edge_list(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

int graph_diameter(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !g.is_connected()) throw InputError("diameter needs a connected nonempty graph");
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  int diameter = 0;
  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, start);
    dist[static_cast<size_t>(start)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : adj[static_cast<size_t>(v)])
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          queue.push_back(w);
        }
    }
    diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
  }
  return diameter;
}

}  // namespace grapoly
