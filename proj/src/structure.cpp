#include "mgs/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "mgs/errors.hpp"
#include "mgs/flows.hpp"

namespace mgs {

namespace {

// Position of each vertex in the order; throws if not a permutation of V.
std::vector<int> order_positions(const Multigraph& g, const LinearOrder& ord,
                                 const char* who) {
  int n = g.vertex_count();
  if (static_cast<int>(ord.order.size()) != n)
    throw InvalidInput(std::string(who) + ": order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    VertexId v = ord.order[i];
    if (v < 0 || v >= n || pos[v] != -1)
      throw InvalidInput(std::string(who) + ": order is not a permutation");
    pos[v] = i;
  }
  return pos;
}

}  // namespace

int hop_width_of_order(const Multigraph& g, const LinearOrder& ord) {
  std::vector<int> pos = order_positions(g, ord, "hop_width_of_order");
  int n = g.vertex_count();
  if (n <= 2) return 0;
  // An edge is a hop at interior position i iff it spans lo < i < hi; sweep
  // a difference array over positions 1..n-2 (both end positions never count).
  std::vector<int> diff(n, 0);
  for (const Edge& e : g.edges()) {
    int lo = std::min(pos[e.u], pos[e.v]);
    int hi = std::max(pos[e.u], pos[e.v]);
    int from = std::max(lo + 1, 1);
    int to = std::min(hi - 1, n - 2);
    if (from <= to) {
      ++diff[from];
      --diff[to + 1];
    }
  }
  int cur = 0;
  int best = 0;
  for (int i = 1; i <= n - 2; ++i) {
    cur += diff[i];
    best = std::max(best, cur);
  }
  return best;
}

int cut_width_of_order(const Multigraph& g, const LinearOrder& ord) {
  std::vector<int> pos = order_positions(g, ord, "cut_width_of_order");
  int n = g.vertex_count();
  if (n <= 1) return 0;
  // An edge crosses the gap after position i iff lo <= i < hi.
  std::vector<int> diff(n + 1, 0);
  for (const Edge& e : g.edges()) {
    ++diff[std::min(pos[e.u], pos[e.v])];
    --diff[std::max(pos[e.u], pos[e.v])];
  }
  int cur = 0;
  int best = 0;
  for (int i = 0; i + 1 < n; ++i) {
    cur += diff[i];
    best = std::max(best, cur);
  }
  return best;
}

HopWidth min_hop_width(const Multigraph& g) {
  int n = g.vertex_count();
  HopWidth out;
  out.order.order.resize(n);
  std::iota(out.order.order.begin(), out.order.order.end(), 0);
  if (n > 18) {
    out.value = hop_width_of_order(g, out.order);
    out.exact = false;
    return out;
  }
  out.exact = true;
  if (n <= 2) {
    out.value = 0;
    return out;
  }
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<int> deg(n, 0);
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
    ++deg[e.u];
    ++deg[e.v];
  }
  auto edges_to = [&](std::uint32_t s, int v) {
    int total = 0;
    for (std::uint32_t w = s; w != 0; w &= w - 1)
      total += mult[v][std::countr_zero(w)];
    return total;
  };
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<int> cut(std::size_t(full) + 1, 0);
  std::vector<int> f(std::size_t(full) + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    cut[s] = cut[rest] + deg[v] - 2 * edges_to(rest, v);
  }
  // f(S) = best over orders placing S first of the max hop count at
  // positions inside S; placing v last at position |S|-1 leaves the edges
  // crossing out of S\{v} minus those ending at v.
  for (std::uint32_t s = 1; s <= full; ++s) {
    int cnt = std::popcount(s);
    bool counted = cnt >= 2 && cnt <= n - 1;
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t w = s; w != 0; w &= w - 1) {
      int v = std::countr_zero(w);
      std::uint32_t rest = s & ~(std::uint32_t(1) << v);
      int here = counted ? cut[rest] - edges_to(rest, v) : 0;
      best = std::min(best, std::max(f[rest], here));
    }
    f[s] = best;
  }
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int cnt = std::popcount(s);
    bool counted = cnt >= 2 && cnt <= n - 1;
    int pick = -1;
    for (std::uint32_t w = s; w != 0; w &= w - 1) {
      int v = std::countr_zero(w);
      std::uint32_t rest = s & ~(std::uint32_t(1) << v);
      int here = counted ? cut[rest] - edges_to(rest, v) : 0;
      if (std::max(f[rest], here) == f[s]) {
        pick = v;
        break;
      }
    }
    out.order.order[i] = pick;
    s &= ~(std::uint32_t(1) << pick);
  }
  out.value = f[full];
  if (hop_width_of_order(g, out.order) != out.value)
    throw std::logic_error("min_hop_width: order does not realize its value");
  return out;
}

Multigraph parallel_graph_R(const Multigraph& g, int p) {
  if (p < 1) throw InvalidInput("parallel_graph_R: threshold must be >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (g.multiplicity(u, v) >= p) edges.push_back({u, v});
  return Multigraph(g.vertex_count(), edges);
}

namespace {

std::set<std::pair<VertexId, VertexId>> edge_pair_set(const Multigraph& g) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : g.edges())
    out.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return out;
}

}  // namespace

ClumpCheck check_clump(const Multigraph& g, const Multigraph& r,
                       const Clump& c) {
  for (VertexId v : c.j_vertices) g.check_vertex(v);
  for (VertexId v : c.x_subset) g.check_vertex(v);
  Multigraph expected = parallel_graph_R(g, c.threshold);
  if (r.vertex_count() != expected.vertex_count() ||
      edge_pair_set(r) != edge_pair_set(expected))
    throw InvalidInput("check_clump: r is not g's parallel graph at the"
                       " clump threshold");
  const VertexSet& j = c.j_vertices;
  const VertexSet& x = c.x_subset;
  if (x.empty() || !std::includes(j.begin(), j.end(), x.begin(), x.end()))
    return ClumpCheck{false, ClumpCondition::x};
  VertexSet rest;
  std::set_difference(j.begin(), j.end(), x.begin(), x.end(),
                      std::inserter(rest, rest.end()));
  if (j.size() != 1) {
    SubgraphResult sub = induced_subgraph(g, j);
    if (edge_connectivity(sub.graph) < c.threshold)
      return ClumpCheck{false, ClumpCondition::a};
  }
  std::vector<std::vector<VertexId>> rcomps = components(r);
  for (const std::vector<VertexId>& comp : rcomps) {
    std::size_t inside = 0;
    for (VertexId v : comp) inside += j.count(v);
    if (inside != 0 && inside != comp.size())
      return ClumpCheck{false, ClumpCondition::b};
  }
  if (!rest.empty()) {
    for (VertexId xv : x) {
      int into = 0;
      for (EdgeId e : g.incident(xv)) into += rest.count(g.other_end(e, xv));
      if (into < c.threshold) return ClumpCheck{false, ClumpCondition::c};
    }
  }
  if (rest.size() >= 2) {
    SubgraphResult sub = induced_subgraph(g, rest);
    if (edge_connectivity(sub.graph) < c.threshold || x.size() < 2)
      return ClumpCheck{false, ClumpCondition::d};
  }
  if (rest.empty() && j.size() != 1)
    return ClumpCheck{false, ClumpCondition::e};
  if (j.size() >= 3) {
    int comps_in_j = 0;
    for (const std::vector<VertexId>& comp : rcomps) {
      bool inside = true;
      for (VertexId v : comp) inside = inside && j.count(v) != 0;
      if (inside) ++comps_in_j;
    }
    if (static_cast<int>(x.size()) < comps_in_j + 1)
      return ClumpCheck{false, ClumpCondition::f};
  }
  return ClumpCheck{true, ClumpCondition::none};
}

bool check_star_minor(const Multigraph& r, const StarMinor& m, int l) {
  if (l < 1) throw InvalidInput("check_star_minor: l must be >= 1");
  for (VertexId v : m.center) r.check_vertex(v);
  for (const VertexSet& leaf : m.leaves)
    for (VertexId v : leaf) r.check_vertex(v);
  if (m.center.empty() || !induces_connected(r, m.center)) return false;
  if (static_cast<int>(m.leaves.size()) < l) return false;
  std::vector<char> used(r.vertex_count(), 0);
  for (VertexId v : m.center) used[v] = 1;
  for (const VertexSet& leaf : m.leaves) {
    if (leaf.empty() || !induces_connected(r, leaf)) return false;
    for (VertexId v : leaf) {
      if (used[v]) return false;
      used[v] = 1;
    }
    bool touches = false;
    for (VertexId v : leaf) {
      for (EdgeId e : r.incident(v))
        if (m.center.count(r.other_end(e, v))) {
          touches = true;
          break;
        }
      if (touches) break;
    }
    if (!touches) return false;
  }
  return true;
}

namespace {

// Spanning tree tracked as a set of edge ids with per-vertex tree degrees.
struct SpanningTree {
  std::vector<char> in_tree;
  std::vector<int> deg;
  int leaves = 0;
};

SpanningTree initial_tree(const Multigraph& r) {
  SpanningTree t;
  t.in_tree.assign(r.edge_count(), 0);
  t.deg.assign(r.vertex_count(), 0);
  std::vector<char> seen(r.vertex_count(), 0);
  seen[0] = 1;
  std::vector<VertexId> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    for (EdgeId e : r.incident(v)) {
      VertexId u = r.other_end(e, v);
      if (!seen[u]) {
        seen[u] = 1;
        t.in_tree[e] = 1;
        ++t.deg[v];
        ++t.deg[u];
        queue.push_back(u);
      }
    }
  }
  for (int d : t.deg) t.leaves += d == 1;
  return t;
}

// Tree edges on the path between a and b, ascending by edge id.
std::vector<EdgeId> tree_path_edges(const Multigraph& r, const SpanningTree& t,
                                    VertexId a, VertexId b) {
  std::vector<EdgeId> via(r.vertex_count(), -1);
  std::vector<char> seen(r.vertex_count(), 0);
  seen[a] = 1;
  std::vector<VertexId> queue{a};
  for (std::size_t qi = 0; qi < queue.size() && !seen[b]; ++qi) {
    VertexId v = queue[qi];
    for (EdgeId e : r.incident(v)) {
      if (!t.in_tree[e]) continue;
      VertexId u = r.other_end(e, v);
      if (!seen[u]) {
        seen[u] = 1;
        via[u] = e;
        queue.push_back(u);
      }
    }
  }
  std::vector<EdgeId> path;
  for (VertexId v = b; v != a;) {
    path.push_back(via[v]);
    v = r.other_end(via[v], v);
  }
  std::sort(path.begin(), path.end());
  return path;
}

// Swap a non-tree edge for a tree edge on its cycle whenever that strictly
// increases the leaf count; first improving pair in (non-tree id, tree id)
// order wins, so the fixpoint is deterministic.
bool improve_leaves(const Multigraph& r, SpanningTree& t) {
  for (EdgeId f = 0; f < r.edge_count(); ++f) {
    if (t.in_tree[f]) continue;
    const Edge& fe = r.edge(f);
    for (EdgeId e : tree_path_edges(r, t, fe.u, fe.v)) {
      const Edge& ee = r.edge(e);
      VertexId touched[4] = {fe.u, fe.v, ee.u, ee.v};
      int delta = 0;
      for (int i = 0; i < 4; ++i) {
        VertexId v = touched[i];
        bool dup = false;
        for (int k = 0; k < i; ++k) dup = dup || touched[k] == v;
        if (dup) continue;
        int after = t.deg[v] + (v == fe.u || v == fe.v) -
                    (v == ee.u || v == ee.v);
        delta += (after == 1) - (t.deg[v] == 1);
      }
      if (delta > 0) {
        t.in_tree[f] = 1;
        t.in_tree[e] = 0;
        ++t.deg[fe.u];
        ++t.deg[fe.v];
        --t.deg[ee.u];
        --t.deg[ee.v];
        t.leaves += delta;
        return true;
      }
    }
  }
  return false;
}

// Bare-path decomposition of r - x; fails (returns false) when some
// component is not a path, an interior vertex has an edge into x, x is too
// large, or there are too many components.
bool validate_path_cover(const Multigraph& r, int l, const VertexSet& x,
                         std::vector<std::vector<VertexId>>* paths) {
  paths->clear();
  if (static_cast<int>(x.size()) >= 4 * l) return false;
  VertexSet keep = complement_vertices(r, x);
  if (keep.empty()) return true;
  SubgraphResult sub = induced_subgraph(r, keep);
  std::vector<std::vector<VertexId>> comps = components(sub.graph);
  if (static_cast<int>(comps.size()) > 2 * l) return false;
  for (const std::vector<VertexId>& comp : comps) {
    std::vector<VertexId> order;
    if (comp.size() == 1) {
      order.push_back(comp[0]);
    } else {
      std::vector<VertexId> ends;
      for (VertexId v : comp) {
        int d = static_cast<int>(sub.graph.incident(v).size());
        if (d > 2) return false;
        if (d == 1) ends.push_back(v);
      }
      if (ends.size() != 2) return false;
      VertexId prev = -1;
      VertexId v = std::min(ends[0], ends[1]);
      for (std::size_t step = 0; step < comp.size(); ++step) {
        order.push_back(v);
        VertexId next = -1;
        for (EdgeId e : sub.graph.incident(v)) {
          VertexId u = sub.graph.other_end(e, v);
          if (u != prev) next = u;
        }
        prev = v;
        v = next;
      }
      if (order.back() != std::max(ends[0], ends[1])) return false;
    }
    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
      VertexId gv = sub.vertex_origin[order[i]];
      for (EdgeId e : r.incident(gv))
        if (x.count(r.other_end(e, gv))) return false;
    }
    std::vector<VertexId> path;
    for (VertexId v : order) path.push_back(sub.vertex_origin[v]);
    paths->push_back(std::move(path));
  }
  return true;
}

// Exhaustive fallback: a connected vertex set with >= l outside neighbors.
std::optional<StarMinor> exact_star_minor(const Multigraph& r, int l) {
  int n = r.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : r.edges()) {
    adj[e.u] |= std::uint32_t(1) << e.v;
    adj[e.v] |= std::uint32_t(1) << e.u;
  }
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t reach = mask & (~mask + 1);
    for (;;) {
      std::uint32_t grown = reach;
      for (std::uint32_t w = reach; w != 0; w &= w - 1)
        grown |= adj[std::countr_zero(w)];
      grown &= mask;
      if (grown == reach) break;
      reach = grown;
    }
    if (reach != mask) continue;
    std::uint32_t nb = 0;
    for (std::uint32_t w = mask; w != 0; w &= w - 1)
      nb |= adj[std::countr_zero(w)];
    nb &= ~mask;
    if (std::popcount(nb) < l) continue;
    StarMinor m;
    for (std::uint32_t w = mask; w != 0; w &= w - 1)
      m.center.insert(std::countr_zero(w));
    for (std::uint32_t w = nb;
         w != 0 && static_cast<int>(m.leaves.size()) < l; w &= w - 1)
      m.leaves.push_back({std::countr_zero(w)});
    return m;
  }
  return std::nullopt;
}

}  // namespace

PathStructure k1l_path_structure(const Multigraph& r, int l) {
  if (l < 2) throw InvalidInput("k1l_path_structure: l must be >= 2");
  int n = r.vertex_count();
  if (n < 1) throw InvalidInput("k1l_path_structure: graph is empty");
  if (!is_connected(r))
    throw InvalidInput("k1l_path_structure: graph must be connected");
  {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : r.edges())
      if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
        throw InvalidInput("k1l_path_structure: graph must be simple");
  }
  PathStructure out;
  if (n == 1) {
    out.paths.push_back({0});
    return out;
  }
  SpanningTree t = initial_tree(r);
  while (improve_leaves(r, t)) {
  }
  if (t.leaves >= l) {
    VertexSet center;
    for (VertexId v = 0; v < n; ++v)
      if (t.deg[v] >= 2) center.insert(v);
    if (!center.empty()) {
      StarMinor m;
      m.center = std::move(center);
      for (VertexId v = 0; v < n && static_cast<int>(m.leaves.size()) < l; ++v)
        if (t.deg[v] == 1) m.leaves.push_back({v});
      if (!check_star_minor(r, m, l))
        throw std::logic_error("k1l_path_structure: leaf-rich tree did not"
                               " yield a star minor");
      out.minor = std::move(m);
      return out;
    }
  }
  VertexSet x;
  for (VertexId v = 0; v < n; ++v) {
    if (t.deg[v] < 3) continue;
    x.insert(v);
    for (EdgeId e : r.incident(v))
      if (t.in_tree[e]) x.insert(r.other_end(e, v));
  }
  if (validate_path_cover(r, l, x, &out.paths)) {
    out.x_set = std::move(x);
    return out;
  }
  if (x.empty()) {
    // A leaf-maximal tree with no branch vertex is a spanning path; the only
    // non-path residue is then a full cycle, broken by removing one vertex.
    VertexSet lowest{0};
    if (validate_path_cover(r, l, lowest, &out.paths)) {
      out.x_set = std::move(lowest);
      return out;
    }
  }
  if (n > 20)
    throw CapExceeded("k1l_path_structure: fallback star search needs at"
                      " most 20 vertices");
  std::optional<StarMinor> m = exact_star_minor(r, l);
  if (!m)
    throw std::logic_error("k1l_path_structure: no path cover and no star"
                           " minor found");
  if (!check_star_minor(r, *m, l))
    throw std::logic_error("k1l_path_structure: fallback star minor does"
                           " not verify");
  out.paths.clear();
  out.minor = std::move(*m);
  return out;
}

StructureBounds paper_bounds(long long t) {
  if (t < 1 || t > 65)
    throw InvalidInput("paper_bounds: t must be between 1 and 65");
  auto power = [&](int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= t;
    return r;
  };
  return StructureBounds{4 * power(2), 6 * power(10), 2 * power(2),
                         2 * power(6)};
}

StructureCheck verify_structure_certificate(const Multigraph& g,
                                            const StructureCertificate& cert) {
  for (VertexId v : cert.a_set) g.check_vertex(v);
  for (EdgeId e : cert.z_set)
    if (e < 0 || e >= g.edge_count())
      throw InvalidInput("verify_structure_certificate: bad edge id");
  SubgraphResult no_z = remove_edges(g, cert.z_set);
  SubgraphResult sub =
      induced_subgraph(no_z.graph, complement_vertices(g, cert.a_set));
  std::vector<std::vector<VertexId>> comps = components(sub.graph);
  if (comps.size() != cert.component_orders.size())
    throw InvalidInput("verify_structure_certificate: one order per"
                       " component required");
  std::map<std::vector<VertexId>, int> by_carrier;
  for (std::size_t i = 0; i < cert.component_orders.size(); ++i) {
    std::vector<VertexId> key = cert.component_orders[i].order;
    std::sort(key.begin(), key.end());
    if (!by_carrier.emplace(std::move(key), static_cast<int>(i)).second)
      throw InvalidInput("verify_structure_certificate: duplicate component"
                         " order");
  }
  std::vector<int> order_of;
  for (const std::vector<VertexId>& comp : comps) {
    std::vector<VertexId> key;
    for (VertexId v : comp) key.push_back(sub.vertex_origin[v]);
    auto it = by_carrier.find(key);
    if (it == by_carrier.end())
      throw InvalidInput("verify_structure_certificate: component has no"
                         " matching order");
    order_of.push_back(it->second);
  }
  if (static_cast<long long>(cert.a_set.size()) > cert.bounds.a_max)
    return StructureCheck{false, StructureViolation::cond1_a};
  if (static_cast<long long>(cert.z_set.size()) > cert.bounds.z_max)
    return StructureCheck{false, StructureViolation::cond1_z};
  if (static_cast<long long>(comps.size()) > cert.bounds.comp_max)
    return StructureCheck{false, StructureViolation::cond2};
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const std::vector<VertexId>& ord =
        cert.component_orders[order_of[ci]].order;
    for (std::size_t i = 1; i + 1 < ord.size(); ++i) {
      for (EdgeId e : no_z.graph.incident(ord[i]))
        if (cert.a_set.count(no_z.graph.other_end(e, ord[i])))
          return StructureCheck{false, StructureViolation::cond3};
    }
  }
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    VertexSet carrier(comps[ci].begin(), comps[ci].end());
    SubgraphResult comp_sub = induced_subgraph(sub.graph, carrier);
    LinearOrder local;
    for (VertexId v : cert.component_orders[order_of[ci]].order)
      local.order.push_back(comp_sub.vertex_map[sub.vertex_map[v]]);
    if (hop_width_of_order(comp_sub.graph, local) > cert.bounds.hop_max)
      return StructureCheck{false, StructureViolation::cond4};
  }
  return StructureCheck{true, StructureViolation::none};
}

std::optional<StructureCertificate> search_structure_certificate(
    const Multigraph& g, int p, int l, const StructureBounds& bounds) {
  if (l < 2)
    throw InvalidInput("search_structure_certificate: l must be >= 2");
  Multigraph r = parallel_graph_R(g, p);
  VertexSet a;
  std::vector<std::vector<VertexId>> paths;
  for (const std::vector<VertexId>& comp : components(r)) {
    VertexSet carrier(comp.begin(), comp.end());
    SubgraphResult sub = induced_subgraph(r, carrier);
    PathStructure ps = k1l_path_structure(sub.graph, l);
    if (ps.minor) return std::nullopt;
    for (VertexId v : ps.x_set) a.insert(sub.vertex_origin[v]);
    for (const std::vector<VertexId>& path : ps.paths) {
      std::vector<VertexId> orig;
      for (VertexId v : path) orig.push_back(sub.vertex_origin[v]);
      paths.push_back(std::move(orig));
    }
  }
  std::vector<int> path_of(g.vertex_count(), -1);
  std::vector<char> interior(g.vertex_count(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths[i].size(); ++j) {
      path_of[paths[i][j]] = static_cast<int>(i);
      if (j != 0 && j + 1 != paths[i].size()) interior[paths[i][j]] = 1;
    }
  EdgeSet z;
  for (const Edge& e : g.edges()) {
    bool at_u = a.count(e.u) != 0;
    bool at_v = a.count(e.v) != 0;
    if (!at_u && !at_v) {
      if (path_of[e.u] != path_of[e.v]) z.insert(e.id);
    } else if (at_u != at_v) {
      if (interior[at_u ? e.v : e.u]) z.insert(e.id);
    }
  }
  StructureCertificate cert;
  cert.a_set = std::move(a);
  cert.z_set = std::move(z);
  cert.bounds = bounds;
  for (std::vector<VertexId>& path : paths)
    cert.component_orders.push_back(LinearOrder{std::move(path)});
  {
    SubgraphResult no_z = remove_edges(g, cert.z_set);
    SubgraphResult sub =
        induced_subgraph(no_z.graph, complement_vertices(g, cert.a_set));
    std::set<std::vector<VertexId>> want;
    std::set<std::vector<VertexId>> got;
    for (const LinearOrder& ord : cert.component_orders) {
      std::vector<VertexId> key = ord.order;
      std::sort(key.begin(), key.end());
      want.insert(std::move(key));
    }
    for (const std::vector<VertexId>& comp : components(sub.graph)) {
      std::vector<VertexId> key;
      for (VertexId v : comp) key.push_back(sub.vertex_origin[v]);
      got.insert(std::move(key));
    }
    if (want != got)
      throw std::logic_error("search_structure_certificate: residue"
                             " components diverge from the path cover");
  }
  if (!verify_structure_certificate(g, cert).ok) return std::nullopt;
  return cert;
}

}  // namespace mgs
