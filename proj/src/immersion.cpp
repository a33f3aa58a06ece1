#include "mgs/immersion.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace mgs {

namespace {

void check_pattern_sizes(const Multigraph& h, const ImmersionCertificate& c) {
  if (static_cast<int>(c.branch.size()) != h.vertex_count())
    throw InvalidInput("certificate: branch map size mismatch");
  if (static_cast<int>(c.composite.size()) != h.edge_count())
    throw InvalidInput("certificate: composite path count mismatch");
}

}  // namespace

Multigraph complete_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) endpoints.emplace_back(u, v);
  return Multigraph(n, endpoints);
}

bool check_immersion(const Multigraph& g, const Multigraph& h,
                     const ImmersionCertificate& cert) {
  check_pattern_sizes(h, cert);
  for (VertexId b : cert.branch) g.check_vertex(b);
  for (const Path& p : cert.composite) {
    g.check_vertex(p.start);
    for (EdgeId e : p.edges)
      if (e < 0 || e >= g.edge_count())
        throw InvalidInput("certificate: dangling edge id " + std::to_string(e));
  }

  // (a) injective branch mapping
  std::vector<VertexId> sorted = cert.branch;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;

  std::vector<char> is_branch(g.vertex_count(), 0);
  for (VertexId b : cert.branch) is_branch[b] = 1;

  // (b) per h-edge, a vertex-simple composite path between the branch images;
  // (c) pairwise edge-id-disjointness across all composite paths.
  std::vector<char> used(g.edge_count(), 0);
  for (EdgeId f = 0; f < h.edge_count(); ++f) {
    const Path& p = cert.composite[f];
    if (!is_simple_path(g, p)) return false;
    VertexId a = cert.branch[h.edge(f).u];
    VertexId b = cert.branch[h.edge(f).v];
    VertexId pa = p.start;
    VertexId pb = path_end(g, p);
    if (!((pa == a && pb == b) || (pa == b && pb == a))) return false;
    for (EdgeId e : p.edges) {
      if (used[e]) return false;
      used[e] = 1;
    }
    if (cert.mode == ImmersionMode::strong) {
      auto verts = path_vertices(g, p);
      for (std::size_t i = 1; i + 1 < verts.size(); ++i)
        if (is_branch[verts[i]]) return false;
    }
  }
  return true;
}

namespace {

struct Router {
  const Multigraph& g;
  const Multigraph& h;
  ImmersionMode mode;
  long long budget;
  long long steps = 0;
  bool exceeded = false;

  std::vector<VertexId> branch;
  std::vector<char> is_branch;
  std::vector<char> used_edge;
  // One visited mask per demand: composite paths are vertex-simple
  // individually (WLOG: a trail shortens to a simple path on a subset of
  // its edges) but distinct paths may share interior vertices.
  std::vector<std::vector<char>> visited;
  std::vector<EdgeId> demand_order;  // h edge ids, hardest first
  std::vector<Path> routed;

  Router(const Multigraph& gg, const Multigraph& hh, ImmersionMode m,
         long long b)
      : g(gg), h(hh), mode(m), budget(b) {
    is_branch.assign(g.vertex_count(), 0);
    used_edge.assign(g.edge_count(), 0);
    visited.assign(h.edge_count(), std::vector<char>(g.vertex_count(), 0));
    routed.resize(h.edge_count());
    demand_order.resize(h.edge_count());
    std::iota(demand_order.begin(), demand_order.end(), 0);
    std::stable_sort(demand_order.begin(), demand_order.end(),
                     [&](EdgeId a, EdgeId b2) {
                       int da = hh.degree(hh.edge(a).u) + hh.degree(hh.edge(a).v);
                       int db = hh.degree(hh.edge(b2).u) + hh.degree(hh.edge(b2).v);
                       if (da != db) return da > db;
                       return a < b2;
                     });
  }

  bool tick() {
    if (++steps > budget) exceeded = true;
    return !exceeded;
  }

  bool route(std::size_t di) {
    if (di == demand_order.size()) return true;
    EdgeId f = demand_order[di];
    VertexId a = branch[h.edge(f).u];
    VertexId b = branch[h.edge(f).v];
    Path p{a, {}};
    visited[di][a] = 1;
    bool ok = extend(di, p, a, b);
    visited[di][a] = 0;
    return ok;
  }

  bool extend(std::size_t di, Path& p, VertexId cur, VertexId target) {
    for (EdgeId e : g.incident(cur)) {
      if (!tick()) return false;
      if (used_edge[e]) continue;
      VertexId w = g.other_end(e, cur);
      if (visited[di][w]) continue;
      if (w == target) {
        used_edge[e] = 1;
        p.edges.push_back(e);
        routed[demand_order[di]] = p;
        if (route(di + 1)) return true;
        p.edges.pop_back();
        used_edge[e] = 0;
        if (exceeded) return false;
        continue;
      }
      if (mode == ImmersionMode::strong && is_branch[w]) continue;
      used_edge[e] = 1;
      visited[di][w] = 1;
      p.edges.push_back(e);
      if (extend(di, p, w, target)) return true;
      p.edges.pop_back();
      visited[di][w] = 0;
      used_edge[e] = 0;
      if (exceeded) return false;
    }
    return false;
  }
};

bool assign_branch(Router& r, std::vector<char>& taken, int hv) {
  const Multigraph& g = r.g;
  const Multigraph& h = r.h;
  if (hv == h.vertex_count()) {
    for (VertexId b : r.branch) r.is_branch[b] = 1;
    bool ok = r.route(0);
    if (!ok)
      for (VertexId b : r.branch) r.is_branch[b] = 0;
    return ok;
  }
  for (VertexId gv = 0; gv < g.vertex_count(); ++gv) {
    if (taken[gv] || g.degree(gv) < h.degree(hv)) continue;
    taken[gv] = 1;
    r.branch[hv] = gv;
    if (assign_branch(r, taken, hv + 1)) return true;
    taken[gv] = 0;
    if (r.exceeded) return false;
  }
  return false;
}

}  // namespace

ImmersionSearch find_immersion(const Multigraph& g, const Multigraph& h,
                               ImmersionMode mode, long long budget) {
  ImmersionSearch out;
  if (h.vertex_count() > g.vertex_count()) {
    out.status = SearchStatus::none;
    return out;
  }
  Router r(g, h, mode, budget);
  r.branch.assign(h.vertex_count(), -1);
  std::vector<char> taken(g.vertex_count(), 0);
  bool found = assign_branch(r, taken, 0);
  out.steps_used = r.steps;
  if (found) {
    ImmersionCertificate cert;
    cert.mode = mode;
    cert.branch = r.branch;
    cert.composite = r.routed;
    if (!check_immersion(g, h, cert))
      throw std::logic_error("find_immersion: produced certificate fails its own check");
    out.status = SearchStatus::found;
    out.certificate = std::move(cert);
  } else {
    out.status = r.exceeded ? SearchStatus::budget_exceeded : SearchStatus::none;
  }
  return out;
}

ImmersionCertificate immerse_universal_into_S(const Multigraph& h,
                                                 const Multigraph& g) {
  int m = g.vertex_count() - 1;
  if (m < 1) throw InvalidInput("star host: too few vertices");
  VertexId hub = m;
  if (g.edge_count() == 0 || g.edge_count() % m != 0)
    throw InvalidInput("star host: edge count not a spoke multiple");
  int l = g.edge_count() / m;
  for (const Edge& e : g.edges())
    if (e.u != hub && e.v != hub)
      throw InvalidInput("star host: edge not incident to hub");
  for (VertexId i = 0; i < m; ++i)
    if (g.degree(i) != l) throw InvalidInput("star host: uneven spoke multiplicity");
  if (h.max_degree() > l)
    throw InvalidInput("pattern degree exceeds spoke multiplicity");
  if (h.vertex_count() > m)
    throw InvalidInput("pattern order exceeds spoke count");

  ImmersionCertificate cert;
  cert.mode = ImmersionMode::strong;
  cert.branch.resize(h.vertex_count());
  std::iota(cert.branch.begin(), cert.branch.end(), 0);
  std::vector<std::size_t> next(m, 0);
  for (const Edge& f : h.edges()) {
    EdgeId eu = g.incident(f.u)[next[f.u]++];
    EdgeId ev = g.incident(f.v)[next[f.v]++];
    cert.composite.push_back({f.u, {eu, ev}});
  }
  if (!check_immersion(g, h, cert))
    throw std::logic_error("universal star immersion failed its own check");
  return cert;
}

ImmersionCertificate immerse_into_dense(const Multigraph& h,
                                        const Multigraph& g) {
  if (!is_connected(g)) throw InvalidInput("dense host must be connected");
  if (g.vertex_count() < h.vertex_count())
    throw InvalidInput("dense host has too few vertices");
  int need = h.edge_count();
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      int mult = g.multiplicity(u, v);
      if (mult > 0 && mult < need)
        throw InvalidInput("dense host: adjacent pair below |E(h)| parallels");
    }

  ImmersionCertificate cert;
  cert.mode = ImmersionMode::weak;
  cert.branch.resize(h.vertex_count());
  std::iota(cert.branch.begin(), cert.branch.end(), 0);
  std::vector<char> used(g.edge_count(), 0);
  for (const Edge& f : h.edges()) {
    // BFS over unused edges; a vertex-simple route retires at most one edge
    // per adjacent pair, so the residual host stays connected.
    std::vector<EdgeId> pred(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(f.u);
    seen[f.u] = 1;
    while (!q.empty() && !seen[f.v]) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        if (used[e]) continue;
        VertexId w = g.other_end(e, v);
        if (seen[w]) continue;
        seen[w] = 1;
        pred[w] = e;
        q.push(w);
      }
    }
    if (!seen[f.v])
      throw std::logic_error("dense immersion: residual route missing");
    std::vector<EdgeId> rev;
    for (VertexId v = f.v; v != f.u;) {
      rev.push_back(pred[v]);
      v = g.other_end(pred[v], v);
    }
    std::reverse(rev.begin(), rev.end());
    for (EdgeId e : rev) used[e] = 1;
    cert.composite.push_back({f.u, rev});
  }
  if (!check_immersion(g, h, cert))
    throw std::logic_error("dense immersion failed its own check");
  return cert;
}

namespace {

// Cut loops out of a walk, keeping endpoints; result is vertex-simple.
Path shortcut(const Multigraph& g, const Path& walk) {
  std::vector<VertexId> vstack{walk.start};
  std::vector<EdgeId> estack;
  std::vector<int> pos(g.vertex_count(), -1);
  pos[walk.start] = 0;
  VertexId cur = walk.start;
  for (EdgeId e : walk.edges) {
    VertexId w = g.other_end(e, cur);
    if (pos[w] >= 0) {
      while (static_cast<int>(vstack.size()) > pos[w] + 1) {
        pos[vstack.back()] = -1;
        vstack.pop_back();
        estack.pop_back();
      }
    } else {
      pos[w] = static_cast<int>(vstack.size());
      vstack.push_back(w);
      estack.push_back(e);
    }
    cur = w;
  }
  return {walk.start, estack};
}

}  // namespace

ImmersionCertificate lift_through_consolidation(
    const Multigraph& g, VertexId u, VertexId v, const Multigraph& h,
    const ImmersionCertificate& cert_on_consolidated) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InvalidInput("consolidation lift: u == v");
  if (g.multiplicity(u, v) < h.edge_count())
    throw InvalidInput("consolidation lift: fewer than |E(h)| parallel u-v edges");

  ConsolidateResult cons = consolidate(g, VertexSet{u, v});
  if (!check_immersion(cons.graph, h, cert_on_consolidated))
    throw InvalidInput("consolidation lift: certificate invalid on consolidated graph");

  std::vector<VertexId> inv(cons.graph.vertex_count(), -1);
  for (VertexId o = 0; o < g.vertex_count(); ++o)
    if (o != u && o != v) inv[cons.vertex_map[o]] = o;
  auto lifted_vertex = [&](VertexId nv) {
    return nv == cons.merged ? u : inv[nv];
  };

  std::vector<EdgeId> connectors;
  for (EdgeId e : g.incident(u))
    if (g.other_end(e, u) == v) connectors.push_back(e);
  std::size_t next_conn = 0;
  auto take_connector = [&]() {
    if (next_conn >= connectors.size())
      throw std::logic_error("consolidation lift: connector pool exhausted");
    return connectors[next_conn++];
  };
  auto in_uv = [&](VertexId x) { return x == u || x == v; };

  ImmersionCertificate cert;
  cert.mode = cert_on_consolidated.mode;
  for (VertexId b : cert_on_consolidated.branch)
    cert.branch.push_back(lifted_vertex(b));

  for (const Path& p : cert_on_consolidated.composite) {
    Path lifted;
    VertexId cur;
    if (p.start == cons.merged) {
      // Land on whichever of u,v the first original edge touches; fix up to
      // the reassigned branch vertex with one parallel connector if needed.
      EdgeId first = cons.edge_origin[p.edges.front()];
      const Edge& fe = g.edge(first);
      cur = in_uv(fe.u) ? fe.u : fe.v;
      lifted.start = lifted_vertex(p.start);
      if (cur != lifted.start) lifted.edges.push_back(take_connector());
    } else {
      cur = inv[p.start];
      lifted.start = cur;
    }
    for (EdgeId ne : p.edges) {
      EdgeId eo = cons.edge_origin[ne];
      const Edge& ed = g.edge(eo);
      if (ed.u != cur && ed.v != cur) {
        // The consolidated walk stepped across the merged vertex; in g this
        // is a hop from one of u,v to the other.
        if (!in_uv(cur)) throw std::logic_error("consolidation lift: walk discontinuity");
        lifted.edges.push_back(take_connector());
        cur = cur == u ? v : u;
      }
      lifted.edges.push_back(eo);
      cur = g.other_end(eo, cur);
    }
    VertexId want_end = lifted_vertex(path_end(cons.graph, p));
    if (cur != want_end) {
      if (!in_uv(cur) || !in_uv(want_end))
        throw std::logic_error("consolidation lift: endpoint mismatch");
      lifted.edges.push_back(take_connector());
    }
    cert.composite.push_back(lifted);
  }

  if (!check_immersion(g, h, cert))
    throw std::logic_error("consolidation lift failed its own check");
  return cert;
}

ImmersionCertificate lift_through_contraction(
    const Multigraph& g, const VertexSet& j, const Multigraph& h,
    const ImmersionCertificate& cert_on_contracted) {
  if (j.empty()) throw InvalidInput("contraction lift: empty vertex set");
  if (cert_on_contracted.mode != ImmersionMode::strong)
    throw InvalidInput("contraction lift: strong certificate required");
  SubgraphResult sub = induced_subgraph(g, j);
  if (j.size() >= 2 && edge_connectivity(sub.graph) < 2 * h.edge_count())
    throw InvalidInput("contraction lift: g[j] below 2|E(h)| edge connectivity");

  ConsolidateResult ctr = contract(g, j);
  if (!check_immersion(ctr.graph, h, cert_on_contracted))
    throw InvalidInput("contraction lift: certificate invalid on contracted graph");

  std::vector<VertexId> inv(ctr.graph.vertex_count(), -1);
  for (VertexId o = 0; o < g.vertex_count(); ++o)
    if (!j.count(o)) inv[ctr.vertex_map[o]] = o;
  VertexId hub = *j.begin();
  std::vector<char> in_j(g.vertex_count(), 0);
  for (VertexId x : j) in_j[x] = 1;

  // Boundary edges the certificate actually uses, in walk order of discovery.
  std::vector<EdgeId> used_boundary;
  std::vector<int> boundary_slot(g.edge_count(), -1);
  for (const Path& p : cert_on_contracted.composite)
    for (EdgeId ne : p.edges) {
      EdgeId eo = ctr.edge_origin[ne];
      const Edge& ed = g.edge(eo);
      if (in_j[ed.u] != in_j[ed.v]) {
        boundary_slot[eo] = static_cast<int>(used_boundary.size());
        used_boundary.push_back(eo);
      }
    }

  // Edge-disjoint reconnection walks inside g[j] from the hub to the j-side
  // endpoint of every used boundary edge, via one aux flow to a shared sink.
  std::vector<Path> inner(used_boundary.size());
  if (!used_boundary.empty()) {
    int ms = sub.graph.edge_count();
    std::vector<std::pair<VertexId, VertexId>> aux_edges;
    for (const Edge& e : sub.graph.edges()) aux_edges.emplace_back(e.u, e.v);
    VertexId sink = sub.graph.vertex_count();
    for (EdgeId eo : used_boundary) {
      const Edge& ed = g.edge(eo);
      VertexId q = in_j[ed.u] ? ed.u : ed.v;
      aux_edges.emplace_back(sub.vertex_map[q], sink);
    }
    Multigraph aux(sub.graph.vertex_count() + 1, aux_edges);
    PathBundle flow = max_edge_disjoint_paths(
        aux, sub.vertex_map[hub], sink, static_cast<int>(used_boundary.size()));
    if (flow.paths.size() != used_boundary.size())
      throw std::logic_error("contraction lift: reconnection flow came up short");
    for (const Path& fp : flow.paths) {
      EdgeId last = fp.edges.back();
      int slot = last - ms;
      if (slot < 0 || slot >= static_cast<int>(used_boundary.size()))
        throw std::logic_error("contraction lift: flow path misses the sink ring");
      Path walk{hub, {}};
      for (std::size_t i = 0; i + 1 < fp.edges.size(); ++i)
        walk.edges.push_back(sub.edge_origin[fp.edges[i]]);
      inner[slot] = walk;  // hub -> q, inside g[j]
    }
  }

  ImmersionCertificate cert;
  cert.mode = ImmersionMode::strong;
  for (VertexId b : cert_on_contracted.branch)
    cert.branch.push_back(b == ctr.merged ? hub : inv[b]);

  for (const Path& p : cert_on_contracted.composite) {
    Path walk;
    walk.start = p.start == ctr.merged ? hub : inv[p.start];
    VertexId cur = walk.start;
    for (EdgeId ne : p.edges) {
      EdgeId eo = ctr.edge_origin[ne];
      const Edge& ed = g.edge(eo);
      if (in_j[ed.u] != in_j[ed.v]) {
        VertexId q = in_j[ed.u] ? ed.u : ed.v;
        VertexId w = in_j[ed.u] ? ed.v : ed.u;
        const Path& ip = inner[boundary_slot[eo]];
        if (cur == w) {
          // Entering j: boundary edge, then reversed inner walk down to hub.
          walk.edges.push_back(eo);
          walk.edges.insert(walk.edges.end(), ip.edges.rbegin(), ip.edges.rend());
          cur = hub;
        } else {
          // Leaving j: we stand at the hub, ride the inner walk out.
          if (cur != hub) throw std::logic_error("contraction lift: walk discontinuity");
          walk.edges.insert(walk.edges.end(), ip.edges.begin(), ip.edges.end());
          walk.edges.push_back(eo);
          cur = w;
        }
      } else {
        walk.edges.push_back(eo);
        cur = g.other_end(eo, cur);
      }
    }
    cert.composite.push_back(shortcut(g, walk));
  }

  if (!check_immersion(g, h, cert))
    throw std::logic_error("contraction lift failed its own check");
  return cert;
}

ImmersionCertificate immerse_from_path_plus_hub(
    const Multigraph& g, const std::vector<VertexId>& pv, VertexId hub,
    int k) {
  if (k < 1) throw InvalidInput("path plus hub: k >= 1 required");
  g.check_vertex(hub);
  std::set<VertexId> distinct(pv.begin(), pv.end());
  if (distinct.size() != pv.size())
    throw InvalidInput("path plus hub: repeated path vertex");
  if (distinct.count(hub)) throw InvalidInput("path plus hub: hub on the path");
  for (std::size_t i = 0; i + 1 < pv.size(); ++i)
    if (g.multiplicity(pv[i], pv[i + 1]) < k)
      throw InvalidInput("path plus hub: consecutive pair below k parallels");

  std::vector<int> nbr_pos;  // path positions adjacent to the hub
  for (std::size_t i = 0; i < pv.size(); ++i)
    if (g.multiplicity(pv[i], hub) > 0) nbr_pos.push_back(static_cast<int>(i));
  if (static_cast<int>(nbr_pos.size()) < k * k)
    throw InvalidInput("path plus hub: hub needs k*k path neighbours");
  nbr_pos.resize(k * k);

  // Fresh-edge bookkeeping per path segment and per hub attachment.
  std::vector<std::vector<EdgeId>> seg_pool(pv.size() ? pv.size() - 1 : 0);
  std::vector<std::size_t> seg_next(seg_pool.size(), 0);
  for (std::size_t i = 0; i + 1 < pv.size(); ++i)
    for (EdgeId e : g.incident(pv[i]))
      if (g.other_end(e, pv[i]) == pv[i + 1]) seg_pool[i].push_back(e);
  auto take_seg = [&](int i) {
    if (seg_next[i] >= seg_pool[i].size())
      throw std::logic_error("path plus hub: segment pool exhausted");
    return seg_pool[i][seg_next[i]++];
  };
  auto hub_edge = [&](int pos) {
    for (EdgeId e : g.incident(pv[pos]))
      if (g.other_end(e, pv[pos]) == hub) return e;
    throw std::logic_error("path plus hub: missing hub edge");
  };

  // Block b of k hub neighbours supplies branch vertex z_b (middle of the
  // block) and k edge-disjoint z_b -> hub routes: one direct, the rest via
  // the block's spare neighbours. Blocks occupy disjoint path spans, so a
  // segment is crossed by fewer than k routes.
  int z_off = (k - 1) / 2;
  std::vector<int> z_pos(k);
  std::vector<std::vector<Path>> bundle(k);
  for (int b = 0; b < k; ++b) {
    z_pos[b] = nbr_pos[b * k + z_off];
    bundle[b].push_back({pv[z_pos[b]], {hub_edge(z_pos[b])}});
    for (int s = 0; s < k; ++s) {
      if (s == z_off) continue;
      int w_pos = nbr_pos[b * k + s];
      Path p{pv[z_pos[b]], {}};
      int step = w_pos > z_pos[b] ? 1 : -1;
      for (int q = z_pos[b]; q != w_pos; q += step)
        p.edges.push_back(take_seg(step > 0 ? q : q - 1));
      p.edges.push_back(hub_edge(w_pos));
      bundle[b].push_back(p);
    }
  }

  Multigraph kk = complete_graph(k);
  ImmersionCertificate cert;
  cert.mode = ImmersionMode::strong;
  for (int b = 0; b < k; ++b) cert.branch.push_back(pv[z_pos[b]]);
  std::vector<std::size_t> used(k, 0);
  for (const Edge& f : kk.edges()) {
    const Path& pa = bundle[f.u][used[f.u]++];
    const Path& pb = bundle[f.v][used[f.v]++];
    Path comp{pa.start, pa.edges};
    comp.edges.insert(comp.edges.end(), pb.edges.rbegin(), pb.edges.rend());
    cert.composite.push_back(comp);
  }
  if (!check_immersion(g, kk, cert))
    throw std::logic_error("path plus hub immersion failed its own check");
  return cert;
}

}  // namespace mgs
