#include "mgs/flows.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace mgs {

VertexId path_end(const Multigraph& g, const Path& p) {
  VertexId cur = p.start;
  g.check_vertex(cur);
  for (EdgeId e : p.edges) cur = g.other_end(e, cur);
  return cur;
}

std::vector<VertexId> path_vertices(const Multigraph& g, const Path& p) {
  std::vector<VertexId> out{p.start};
  VertexId cur = p.start;
  for (EdgeId e : p.edges) {
    cur = g.other_end(e, cur);
    out.push_back(cur);
  }
  return out;
}

bool is_walk(const Multigraph& g, const Path& p) {
  if (p.start < 0 || p.start >= g.vertex_count()) return false;
  std::set<EdgeId> seen;
  VertexId cur = p.start;
  for (EdgeId e : p.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    if (!seen.insert(e).second) return false;
    const Edge& ed = g.edge(e);
    if (ed.u != cur && ed.v != cur) return false;
    cur = ed.u == cur ? ed.v : ed.u;
  }
  return true;
}

bool is_simple_path(const Multigraph& g, const Path& p) {
  if (!is_walk(g, p)) return false;
  auto verts = path_vertices(g, p);
  std::sort(verts.begin(), verts.end());
  return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

bool validate_path_bundle(const Multigraph& g, const PathBundle& b) {
  std::set<EdgeId> used;
  for (const Path& p : b.paths) {
    if (!is_walk(g, p)) return false;
    for (EdgeId e : p.edges)
      if (!used.insert(e).second) return false;
  }
  return true;
}

namespace {

// Arc pair per edge: arc 2e runs u->v, arc 2e+1 runs v->u, unit capacity each.
// Pushing along an arc decrements it and increments its partner, so the pair
// state encodes net unit flow in either direction.
struct FlowNet {
  const Multigraph& g;
  std::vector<int> cap;

  FlowNet(const Multigraph& graph, const EdgeSet* forbidden) : g(graph) {
    cap.assign(2 * g.edge_count(), 1);
    if (forbidden)
      for (EdgeId e : *forbidden)
        if (e >= 0 && e < g.edge_count()) cap[2 * e] = cap[2 * e + 1] = 0;
  }

  VertexId arc_head(int arc) const {
    const Edge& e = g.edge(arc / 2);
    return (arc & 1) ? e.u : e.v;
  }
  VertexId arc_tail(int arc) const {
    const Edge& e = g.edge(arc / 2);
    return (arc & 1) ? e.v : e.u;
  }
  int arc_from(EdgeId e, VertexId v) const {
    return g.edge(e).u == v ? 2 * e : 2 * e + 1;
  }

  // One shortest augmenting path; returns false when s,t are disconnected in
  // the residual graph.
  bool augment(VertexId s, VertexId t) {
    std::vector<int> pred_arc(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        int arc = arc_from(e, v);
        if (cap[arc] <= 0) continue;
        VertexId w = arc_head(arc);
        if (seen[w]) continue;
        seen[w] = 1;
        pred_arc[w] = arc;
        q.push(w);
      }
    }
    if (!seen[t]) return false;
    for (VertexId v = t; v != s;) {
      int arc = pred_arc[v];
      --cap[arc];
      ++cap[arc ^ 1];
      v = arc_tail(arc);
    }
    return true;
  }

  int run(VertexId s, VertexId t, int limit) {
    int flow = 0;
    while ((limit < 0 || flow < limit) && augment(s, t)) ++flow;
    return flow;
  }

  VertexSet residual_side(VertexId s) const {
    VertexSet side{s};
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        int arc = arc_from(e, v);
        if (cap[arc] <= 0) continue;
        VertexId w = arc_head(arc);
        if (!side.count(w)) {
          side.insert(w);
          stack.push_back(w);
        }
      }
    }
    return side;
  }

  // Decompose the final flow into vertex-simple s-t paths; flow cycles are
  // excised on the fly and their arcs discarded.
  PathBundle extract_paths(VertexId s, VertexId t, int flow) {
    std::vector<char> arc_used(2 * g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (cap[2 * e] == 0 && cap[2 * e + 1] == 2) arc_used[2 * e] = 1;
      if (cap[2 * e + 1] == 0 && cap[2 * e] == 2) arc_used[2 * e + 1] = 1;
    }
    PathBundle bundle;
    for (int i = 0; i < flow; ++i) {
      std::vector<VertexId> vstack{s};
      std::vector<EdgeId> estack;
      std::vector<int> pos(g.vertex_count(), -1);
      pos[s] = 0;
      while (vstack.back() != t) {
        VertexId v = vstack.back();
        int chosen = -1;
        for (EdgeId e : g.incident(v)) {
          int arc = arc_from(e, v);
          if (arc_used[arc]) {
            chosen = arc;
            break;
          }
        }
        if (chosen < 0) throw InvalidInput("flow decomposition: stuck walk");
        arc_used[chosen] = 0;
        VertexId w = arc_head(chosen);
        if (pos[w] >= 0) {
          // Walked into a flow cycle; drop it.
          while (static_cast<int>(vstack.size()) > pos[w] + 1) {
            pos[vstack.back()] = -1;
            vstack.pop_back();
            estack.pop_back();
          }
        } else {
          pos[w] = static_cast<int>(vstack.size());
          vstack.push_back(w);
          estack.push_back(chosen / 2);
        }
      }
      bundle.paths.push_back({s, estack});
    }
    return bundle;
  }
};

void check_st(const Multigraph& g, VertexId s, VertexId t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw InvalidInput("flow endpoints coincide");
}

}  // namespace

PathBundle max_edge_disjoint_paths(const Multigraph& g, VertexId s, VertexId t,
                                   int limit, const EdgeSet* forbidden) {
  check_st(g, s, t);
  if (limit == 0) return {};
  FlowNet net(g, forbidden);
  int flow = net.run(s, t, limit);
  return net.extract_paths(s, t, flow);
}

CutSide min_cut_side(const Multigraph& g, VertexId s, VertexId t,
                     const EdgeSet* forbidden) {
  check_st(g, s, t);
  FlowNet net(g, forbidden);
  int flow = net.run(s, t, -1);
  CutSide cut;
  cut.side = net.residual_side(s);
  if (cut.side.count(t)) throw InvalidInput("min_cut_side: sink reachable after max flow");
  cut.cut_edges = delta(g, cut.side);
  if (forbidden)
    for (EdgeId e : *forbidden) cut.cut_edges.erase(e);
  cut.size = flow;
  if (static_cast<int>(cut.cut_edges.size()) != flow)
    throw InvalidInput("min_cut_side: duality mismatch");
  return cut;
}

int edge_connectivity(const Multigraph& g) {
  if (g.vertex_count() < 2)
    throw InvalidInput("edge_connectivity: need at least 2 vertices");
  int best = g.edge_count() + 1;
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    FlowNet net(g, nullptr);
    best = std::min(best, net.run(0, v, best));
    if (best == 0) break;
  }
  return best;
}

}  // namespace mgs
