#include "mgs/multigraph.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace mgs {

Multigraph::Multigraph(
    int vertex_count,
    const std::vector<std::pair<VertexId, VertexId>>& endpoints)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InvalidInput("negative vertex count");
  incidence_.assign(vertex_count_, {});
  edges_.reserve(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    auto [u, v] = endpoints[i];
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
      throw InvalidInput("edge " + std::to_string(i) +
                         ": endpoint out of range");
    if (u == v)
      throw InvalidInput("edge " + std::to_string(i) + ": loop (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
    EdgeId id = static_cast<EdgeId>(i);
    edges_.push_back({id, u, v});
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
  }
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw InvalidInput("edge id " + std::to_string(e) + " out of range");
  return edges_[e];
}

const std::vector<EdgeId>& Multigraph::incident(VertexId v) const {
  check_vertex(v);
  return incidence_[v];
}

int Multigraph::degree(VertexId v) const {
  return static_cast<int>(incident(v).size());
}

int Multigraph::max_degree() const {
  int d = 0;
  for (VertexId v = 0; v < vertex_count_; ++v)
    d = std::max(d, static_cast<int>(incidence_[v].size()));
  return d;
}

VertexId Multigraph::other_end(EdgeId e, VertexId at) const {
  const Edge& ed = edge(e);
  if (ed.u == at) return ed.v;
  if (ed.v == at) return ed.u;
  throw InvalidInput("vertex " + std::to_string(at) +
                     " is not an endpoint of edge " + std::to_string(e));
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  int count = 0;
  for (EdgeId e : incidence_[u])
    if (other_end(e, u) == v) ++count;
  return count;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count_)
    throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
}

namespace {

void check_vertex_set(const Multigraph& g, const VertexSet& x,
                      const char* what) {
  for (VertexId v : x) {
    if (v < 0 || v >= g.vertex_count())
      throw InvalidInput(std::string(what) + ": vertex id " +
                         std::to_string(v) + " out of range");
  }
}

}  // namespace

EdgeSet delta(const Multigraph& g, const VertexSet& x) {
  check_vertex_set(g, x, "delta");
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : x) in[v] = 1;
  EdgeSet out;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) out.insert(e.id);
  return out;
}

VertexSet neighborhood(const Multigraph& g, const VertexSet& x) {
  check_vertex_set(g, x, "neighborhood");
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : x) in[v] = 1;
  VertexSet out;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && !in[e.v]) out.insert(e.v);
    if (in[e.v] && !in[e.u]) out.insert(e.u);
  }
  return out;
}

ConsolidateResult consolidate(const Multigraph& g, const VertexSet& x) {
  check_vertex_set(g, x, "consolidate");
  if (x.empty()) throw InvalidInput("consolidate: empty vertex set");
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : x) in[v] = 1;

  ConsolidateResult res;
  res.vertex_map.assign(g.vertex_count(), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in[v]) res.vertex_map[v] = next++;
  res.merged = next;
  for (VertexId v : x) res.vertex_map[v] = res.merged;

  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) continue;  // interior edges are deleted
    endpoints.emplace_back(res.vertex_map[e.u], res.vertex_map[e.v]);
    res.edge_origin.push_back(e.id);
  }
  res.graph = Multigraph(next + 1, endpoints);
  return res;
}

ConsolidateResult contract(const Multigraph& g, const VertexSet& x) {
  if (!induces_connected(g, x))
    throw InvalidInput("contract: vertex set does not induce a connected subgraph");
  return consolidate(g, x);
}

Multigraph line_graph(const Multigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  int m = g.edge_count();
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& a = g.edge(e);
    for (EdgeId f = e + 1; f < m; ++f) {
      const Edge& b = g.edge(f);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        endpoints.emplace_back(e, f);
    }
  }
  return Multigraph(m, endpoints);
}

Multigraph gen_parallel_path(int k, int n) {
  if (k < 1 || n < 1) throw InvalidInput("gen_parallel_path: need k >= 1, n >= 1");
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (int i = 0; i + 1 < n; ++i)
    for (int c = 0; c < k; ++c) endpoints.emplace_back(i, i + 1);
  return Multigraph(n, endpoints);
}

Multigraph gen_parallel_star(int l, int m) {
  if (l < 1 || m < 1) throw InvalidInput("gen_parallel_star: need l >= 1, m >= 1");
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < l; ++c) endpoints.emplace_back(i, m);
  return Multigraph(m + 1, endpoints);
}

Multigraph gen_random(std::uint64_t seed, int n, int edge_budget,
                      int max_multiplicity) {
  if (n < 2) throw InvalidInput("gen_random: need at least 2 vertices");
  if (edge_budget < 0 || max_multiplicity < 1)
    throw InvalidInput("gen_random: bad edge budget or multiplicity");
  long long pool = static_cast<long long>(n) * (n - 1) / 2 * max_multiplicity;
  if (edge_budget > pool)
    throw InvalidInput("gen_random: edge budget exceeds slot pool");

  std::vector<std::pair<VertexId, VertexId>> slots;
  slots.reserve(pool);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int c = 0; c < max_multiplicity; ++c) slots.emplace_back(u, v);
  std::mt19937_64 rng(seed);
  std::shuffle(slots.begin(), slots.end(), rng);
  slots.resize(edge_budget);
  std::sort(slots.begin(), slots.end());
  return Multigraph(n, slots);
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.push_back({});
    std::vector<VertexId> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Multigraph& g) {
  return components(g).size() <= 1;
}

bool induces_connected(const Multigraph& g, const VertexSet& x) {
  check_vertex_set(g, x, "induces_connected");
  if (x.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : x) in[v] = 1;
  std::vector<VertexId> stack{*x.begin()};
  VertexSet seen{*x.begin()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (in[w] && !seen.count(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == x.size();
}

SubgraphResult induced_subgraph(const Multigraph& g, const VertexSet& keep) {
  check_vertex_set(g, keep, "induced_subgraph");
  SubgraphResult res;
  res.vertex_map.assign(g.vertex_count(), -1);
  for (VertexId v : keep) {
    res.vertex_map[v] = static_cast<VertexId>(res.vertex_origin.size());
    res.vertex_origin.push_back(v);
  }
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (const Edge& e : g.edges()) {
    if (res.vertex_map[e.u] < 0 || res.vertex_map[e.v] < 0) continue;
    endpoints.emplace_back(res.vertex_map[e.u], res.vertex_map[e.v]);
    res.edge_origin.push_back(e.id);
  }
  res.graph = Multigraph(static_cast<int>(keep.size()), endpoints);
  return res;
}

SubgraphResult remove_edges(const Multigraph& g, const EdgeSet& drop) {
  for (EdgeId e : drop)
    if (e < 0 || e >= g.edge_count())
      throw InvalidInput("remove_edges: edge id out of range");
  SubgraphResult res;
  res.vertex_origin.resize(g.vertex_count());
  res.vertex_map.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    res.vertex_origin[v] = res.vertex_map[v] = v;
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (const Edge& e : g.edges()) {
    if (drop.count(e.id)) continue;
    endpoints.emplace_back(e.u, e.v);
    res.edge_origin.push_back(e.id);
  }
  res.graph = Multigraph(g.vertex_count(), endpoints);
  return res;
}

Multigraph underlying_simple(const Multigraph& g) {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges())
    pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::vector<std::pair<VertexId, VertexId>> endpoints(pairs.begin(),
                                                       pairs.end());
  return Multigraph(g.vertex_count(), endpoints);
}

VertexSet all_vertices(const Multigraph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.insert(v);
  return out;
}

VertexSet complement_vertices(const Multigraph& g, const VertexSet& x) {
  check_vertex_set(g, x, "complement_vertices");
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!x.count(v)) out.insert(v);
  return out;
}

}  // namespace mgs
