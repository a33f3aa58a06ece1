#include "mgs/treecut.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>

#include "mgs/errors.hpp"
#include "mgs/flows.hpp"

namespace mgs {

namespace {

std::vector<std::vector<int>> tree_adjacency(const Tree& t) {
  std::vector<std::vector<int>> adj(t.node_count);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// Nodes on the `start` side once tree edge `skip` is removed.
std::vector<char> tree_side(const Tree& t, int skip, int start) {
  std::vector<std::vector<std::pair<int, int>>> adj(t.node_count);
  for (int i = 0; i < static_cast<int>(t.edges.size()); ++i) {
    adj[t.edges[i].first].push_back({t.edges[i].second, i});
    adj[t.edges[i].second].push_back({t.edges[i].first, i});
  }
  std::vector<char> side(t.node_count, 0);
  side[start] = 1;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [y, i] : adj[x])
      if (i != skip && !side[y]) {
        side[y] = 1;
        stack.push_back(y);
      }
  }
  return side;
}

// Component index of every node of t - `node`; components are numbered in
// order of their smallest node id.
std::vector<int> punctured_components(const Tree& t, int node, int* count) {
  auto adj = tree_adjacency(t);
  std::vector<int> comp(t.node_count, -1);
  int c = 0;
  for (int start = 0; start < t.node_count; ++start) {
    if (start == node || comp[start] != -1) continue;
    comp[start] = c;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (y != node && comp[y] == -1) {
          comp[y] = c;
          stack.push_back(y);
        }
    }
    ++c;
  }
  *count = c;
  return comp;
}

void require_tree_cut(const Multigraph& g, const TreeCutDecomposition& d,
                      const char* who) {
  if (!check_tree_cut(g, d))
    throw InvalidInput(std::string(who) + ": invalid tree-cut decomposition");
}

}  // namespace

bool check_tree(const Tree& t) {
  if (t.node_count < 1) return false;
  if (static_cast<int>(t.edges.size()) != t.node_count - 1) return false;
  for (auto [a, b] : t.edges)
    if (a < 0 || a >= t.node_count || b < 0 || b >= t.node_count || a == b)
      return false;
  // connected with node_count - 1 edges => acyclic
  auto adj = tree_adjacency(t);
  std::vector<char> seen(t.node_count, 0);
  seen[0] = 1;
  int reached = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == t.node_count;
}

bool check_tree_cut(const Multigraph& g, const TreeCutDecomposition& d) {
  if (!check_tree(d.tree)) return false;
  if (static_cast<int>(d.bags.size()) != d.tree.node_count) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (const VertexSet& bag : d.bags)
    for (VertexId v : bag) {
      if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
      seen[v] = 1;
    }
  for (char c : seen)
    if (!c) return false;
  return true;
}

bool check_tree_decomposition(const Multigraph& g,
                              const TreeDecomposition& d) {
  if (!check_tree(d.tree)) return false;
  if (static_cast<int>(d.bags.size()) != d.tree.node_count) return false;
  for (const VertexSet& bag : d.bags)
    for (VertexId v : bag)
      if (v < 0 || v >= g.vertex_count()) return false;
  auto adj = tree_adjacency(d.tree);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<char> has(d.tree.node_count, 0);
    int total = 0;
    int start = -1;
    for (int node = 0; node < d.tree.node_count; ++node)
      if (d.bags[node].count(v)) {
        has[node] = 1;
        ++total;
        start = node;
      }
    if (total == 0) return false;
    std::vector<char> seen(d.tree.node_count, 0);
    seen[start] = 1;
    int reached = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (has[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != total) return false;
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (const VertexSet& bag : d.bags)
      if (bag.count(e.u) && bag.count(e.v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

int adhesion(const Multigraph& g, const TreeCutDecomposition& d) {
  require_tree_cut(g, d, "adhesion");
  int best = 0;
  for (int i = 0; i < static_cast<int>(d.tree.edges.size()); ++i) {
    std::vector<char> side = tree_side(d.tree, i, d.tree.edges[i].first);
    VertexSet u;
    for (int node = 0; node < d.tree.node_count; ++node)
      if (side[node]) u.insert(d.bags[node].begin(), d.bags[node].end());
    best = std::max(best, static_cast<int>(delta(g, u).size()));
  }
  return best;
}

Torso torso(const Multigraph& g, const TreeCutDecomposition& d, int node) {
  require_tree_cut(g, d, "torso");
  if (node < 0 || node >= d.tree.node_count)
    throw InvalidInput("torso: node out of range");
  int comp_count = 0;
  std::vector<int> comp = punctured_components(d.tree, node, &comp_count);
  Torso out;
  std::vector<VertexId> map(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v : d.bags[node]) {
    map[v] = next;
    out.core.insert(next);
    out.core_origin.push_back(v);
    ++next;
  }
  std::vector<int> comp_vertex(comp_count);
  for (int c = 0; c < comp_count; ++c) {
    comp_vertex[c] = next;
    out.peripheral.insert(next);
    ++next;
  }
  for (int other = 0; other < d.tree.node_count; ++other)
    if (other != node)
      for (VertexId v : d.bags[other]) map[v] = comp_vertex[comp[other]];
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g.edges()) {
    VertexId a = map[e.u];
    VertexId b = map[e.v];
    if (a == b) continue;  // edges inside a consolidated component vanish
    edges.push_back({a, b});
  }
  out.graph = Multigraph(next, edges);
  return out;
}

WidthResult width(const Multigraph& g, const TreeCutDecomposition& d) {
  require_tree_cut(g, d, "width");
  WidthResult r;
  r.value = adhesion(g, d);
  for (int node = 0; node < d.tree.node_count; ++node)
    r.value = std::max(r.value, torso(g, d, node).graph.vertex_count());
  r.simplified_ok = g.vertex_count() >= 2 && edge_connectivity(g) >= 3;
  return r;
}

bool check_bounded_degree_torsos(const Multigraph& g,
                                 const TreeCutDecomposition& d, int a, int b) {
  require_tree_cut(g, d, "check_bounded_degree_torsos");
  if (a < 0 || b < 0)
    throw InvalidInput("check_bounded_degree_torsos: negative threshold");
  for (int node = 0; node < d.tree.node_count; ++node) {
    Torso t = torso(g, d, node);
    int big = 0;
    for (VertexId v = 0; v < t.graph.vertex_count(); ++v)
      if (t.graph.degree(v) >= b) ++big;
    if (big > a) return false;
  }
  return true;
}

TreeDecompositionResult exact_tree_decomposition(const Multigraph& g) {
  int n = g.vertex_count();
  if (n < 1) throw InvalidInput("exact_tree_decomposition: empty graph");
  if (n > 20)
    throw CapExceeded("exact_tree_decomposition: more than 20 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = (1u << n) - 1;
  // Vertices outside s+v reachable from v along paths whose interior lies in
  // s; their count is the bag size minus one when v is eliminated after s.
  auto frontier = [&](std::uint32_t s, int v) {
    std::uint32_t reach = adj[v];
    for (;;) {
      std::uint32_t grow = reach;
      for (std::uint32_t w = reach & s; w; w &= w - 1)
        grow |= adj[std::countr_zero(w)];
      if (grow == reach) break;
      reach = grow;
    }
    return std::popcount(reach & full & ~s & ~(1u << v));
  };
  std::vector<std::uint8_t> f(std::size_t(1) << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t w = s; w; w &= w - 1) {
      int v = std::countr_zero(w);
      std::uint32_t rest = s & ~(1u << v);
      best = std::min(best, std::max<int>(f[rest], frontier(rest, v)));
    }
    f[s] = static_cast<std::uint8_t>(best);
  }
  // Recover an optimal elimination order back to front.
  std::vector<int> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int pick = -1;
    for (std::uint32_t w = s; w; w &= w - 1) {
      int v = std::countr_zero(w);
      std::uint32_t rest = s & ~(1u << v);
      if (std::max<int>(f[rest], frontier(rest, v)) == f[s]) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("elimination order reconstruction");
    order[i] = pick;
    s &= ~(1u << pick);
  }
  // Simulate the elimination, collecting fill-in bags and tree edges.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::uint32_t> fill = adj;
  std::vector<VertexSet> bags(n);
  std::vector<std::pair<int, int>> tedges;
  std::uint32_t done = 0;
  int widest = 0;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint32_t b = fill[v] & ~done & ~(1u << v);
    bags[i].insert(v);
    widest = std::max(widest, std::popcount(b));
    int parent = -1;
    for (std::uint32_t w = b; w; w &= w - 1) {
      int u = std::countr_zero(w);
      bags[i].insert(u);
      if (parent == -1 || pos[u] < pos[parent]) parent = u;
    }
    if (parent != -1)
      tedges.push_back({i, pos[parent]});
    else if (i + 1 < n)
      tedges.push_back({i, i + 1});  // keep isolated tails attached
    for (std::uint32_t w = b; w; w &= w - 1)
      fill[std::countr_zero(w)] |= b & ~(1u << std::countr_zero(w));
    done |= 1u << v;
  }
  if (widest != f[full])
    throw std::logic_error("tree decomposition width mismatch");
  TreeDecompositionResult out;
  out.decomposition = TreeDecomposition{Tree{n, std::move(tedges)},
                                        std::move(bags)};
  out.width = widest;
  if (!check_tree_decomposition(g, out.decomposition))
    throw std::logic_error("elimination produced an invalid decomposition");
  return out;
}

TreeCutDecomposition convert_tree_decomposition(const Multigraph& g,
                                                const TreeDecomposition& td,
                                                int d_max) {
  if (!check_tree_decomposition(g, td))
    throw InvalidInput("convert_tree_decomposition: invalid decomposition");
  if (d_max < g.max_degree())
    throw InvalidInput(
        "convert_tree_decomposition: degree bound below the max degree");
  int w = 0;
  for (const VertexSet& bag : td.bags)
    w = std::max(w, static_cast<int>(bag.size()) - 1);
  // Make the decomposition small: contract any tree edge whose bag nests
  // inside the neighbor's. Every node then owns a vertex assigned root-most
  // to it, which the torso bound below depends on.
  int m = td.tree.node_count;
  std::vector<int> rep(m);
  for (int i = 0; i < m; ++i) rep[i] = i;
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  std::vector<VertexSet> bags = td.bags;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : td.tree.edges) {
      int ra = find(a);
      int rb = find(b);
      if (ra == rb) continue;
      if (std::includes(bags[rb].begin(), bags[rb].end(), bags[ra].begin(),
                        bags[ra].end()))
        rep[ra] = rb;
      else if (std::includes(bags[ra].begin(), bags[ra].end(),
                             bags[rb].begin(), bags[rb].end()))
        rep[rb] = ra;
      else
        continue;
      changed = true;
    }
  }
  std::vector<int> newid(m, -1);
  int m2 = 0;
  for (int i = 0; i < m; ++i)
    if (find(i) == i) newid[i] = m2++;
  Tree t2;
  t2.node_count = m2;
  for (auto [a, b] : td.tree.edges) {
    int ra = find(a);
    int rb = find(b);
    if (ra != rb) t2.edges.push_back({newid[ra], newid[rb]});
  }
  std::vector<VertexSet> sbags(m2);
  for (int i = 0; i < m; ++i)
    if (find(i) == i) sbags[newid[i]] = bags[i];
  // Root at node 0 and send every vertex to its unique root-most bag.
  auto adj = tree_adjacency(t2);
  std::vector<int> depth(m2, -1);
  depth[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int y : adj[queue[qi]])
      if (depth[y] == -1) {
        depth[y] = depth[queue[qi]] + 1;
        queue.push_back(y);
      }
  TreeCutDecomposition out;
  out.tree = t2;
  out.bags.resize(m2);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int best = -1;
    int ties = 0;
    for (int node = 0; node < m2; ++node) {
      if (!sbags[node].count(v)) continue;
      if (best == -1 || depth[node] < depth[best]) {
        best = node;
        ties = 1;
      } else if (depth[node] == depth[best]) {
        ++ties;
      }
    }
    if (best == -1 || ties != 1)
      throw std::logic_error("root-most bag is not unique");
    out.bags[best].insert(v);
  }
  if (!check_tree_cut(g, out))
    throw std::logic_error("conversion produced an invalid decomposition");
  // Lemma bounds; a violation means the construction above is wrong for this
  // input, so fail loudly rather than return a weaker decomposition.
  long long adh_bound = (2LL * w + 2) * d_max;
  long long torso_bound = (d_max + 1LL) * (w + 1LL);
  if (adhesion(g, out) > adh_bound)
    throw std::logic_error("conversion exceeded the adhesion bound");
  for (int node = 0; node < m2; ++node)
    if (torso(g, out, node).graph.vertex_count() > torso_bound)
      throw std::logic_error("conversion exceeded the torso bound");
  return out;
}

namespace {

std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq,
                                                int m) {
  std::vector<int> deg(m, 1);
  for (int x : seq) ++deg[x];
  std::vector<char> used(m, 0);
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    int leaf = -1;
    for (int v = 0; v < m; ++v)
      if (!used[v] && deg[v] == 1) {
        leaf = v;
        break;
      }
    used[leaf] = 1;
    edges.push_back({leaf, x});
    --deg[x];
  }
  int a = -1;
  for (int v = 0; v < m; ++v)
    if (!used[v] && deg[v] == 1) {
      if (a == -1)
        a = v;
      else
        edges.push_back({a, v});
    }
  return edges;
}

std::string ahu_label(int root, int from,
                      const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> parts;
  for (int y : adj[root])
    if (y != from) parts.push_back(ahu_label(y, root, adj));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const std::string& p : parts) out += p;
  out += ")";
  return out;
}

std::string tree_canonical(const Tree& t) {
  if (t.node_count == 1) return "()";
  auto adj = tree_adjacency(t);
  // strip leaves to find the one or two centers
  std::vector<int> deg(t.node_count);
  for (int v = 0; v < t.node_count; ++v) deg[v] = adj[v].size();
  std::vector<int> layer;
  std::vector<char> gone(t.node_count, 0);
  for (int v = 0; v < t.node_count; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = t.node_count;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      gone[v] = 1;
      --remaining;
      for (int y : adj[v])
        if (!gone[y] && --deg[y] == 1) next.push_back(y);
    }
    layer = std::move(next);
  }
  std::string best;
  for (int v = 0; v < t.node_count; ++v)
    if (!gone[v]) {
      std::string s = ahu_label(v, -1, adj);
      if (best.empty() || s < best) best = s;
    }
  return best;
}

// All trees on m nodes up to isomorphism, each as one labeled
// representative, ordered by canonical form.
std::vector<Tree> unlabeled_trees(int m) {
  if (m == 1) return {Tree{1, {}}};
  std::vector<std::pair<std::string, Tree>> found;
  std::set<std::string> seen;
  std::vector<int> seq(m - 2, 0);
  for (;;) {
    Tree t{m, pruefer_decode(seq, m)};
    std::string canon = tree_canonical(t);
    if (seen.insert(canon).second) found.push_back({canon, t});
    int p = 0;
    while (p < static_cast<int>(seq.size()) && ++seq[p] == m) {
      seq[p] = 0;
      ++p;
    }
    if (p == static_cast<int>(seq.size())) break;
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tree> out;
  for (auto& [canon, t] : found) out.push_back(std::move(t));
  return out;
}

struct ShardBest {
  int width = std::numeric_limits<int>::max();
  int shard = -1;
  long long index = -1;
  std::vector<int> assign;
};

// Scan every bag assignment for one tree shape, keeping the first assignment
// that attains the shard minimum. With the consolidation convention,
// |V(torso at t)| is |bag(t)| + deg_T(t), so only adhesion needs a cut scan.
ShardBest scan_tree_shard(const Multigraph& g, const Tree& t, int shard) {
  int n = g.vertex_count();
  int m = t.node_count;
  std::vector<int> deg(m, 0);
  for (auto [a, b] : t.edges) {
    ++deg[a];
    ++deg[b];
  }
  std::vector<std::uint32_t> side_nodes(t.edges.size(), 0);
  for (int i = 0; i < static_cast<int>(t.edges.size()); ++i) {
    std::vector<char> side = tree_side(t, i, t.edges[i].first);
    for (int node = 0; node < m; ++node)
      if (side[node]) side_nodes[i] |= 1u << node;
  }
  std::vector<std::pair<int, int>> gedges;
  for (const Edge& e : g.edges()) gedges.push_back({e.u, e.v});
  ShardBest best;
  int cutoff = n + 1;  // the single-node tree always attains n
  if (shard == 0) cutoff = std::numeric_limits<int>::max();
  std::vector<int> assign(n, 0);
  std::vector<std::uint32_t> bagmask(m);
  long long index = 0;
  for (;;) {
    std::fill(bagmask.begin(), bagmask.end(), 0);
    for (int v = 0; v < n; ++v) bagmask[assign[v]] |= 1u << v;
    int w = 0;
    if (m == 1) {
      w = n;
    } else {
      for (int node = 0; node < m && w < cutoff; ++node)
        w = std::max(w, std::popcount(bagmask[node]) + deg[node]);
      for (std::size_t i = 0; i < t.edges.size() && w < cutoff; ++i) {
        std::uint32_t sv = 0;
        for (int node = 0; node < m; ++node)
          if ((side_nodes[i] >> node) & 1) sv |= bagmask[node];
        int cut = 0;
        for (auto [u, v] : gedges) cut += ((sv >> u) & 1) != ((sv >> v) & 1);
        w = std::max(w, cut);
      }
    }
    if (w < cutoff) {
      cutoff = w;
      best = ShardBest{w, shard, index, assign};
    }
    ++index;
    int p = 0;
    while (p < n && ++assign[p] == m) {
      assign[p] = 0;
      ++p;
    }
    if (p == n) break;
  }
  return best;
}

TreeCutDecomposition singleton_path_decomposition(const Multigraph& g) {
  int n = g.vertex_count();
  TreeCutDecomposition d;
  d.tree.node_count = n;
  for (int i = 0; i + 1 < n; ++i) d.tree.edges.push_back({i, i + 1});
  d.bags.resize(n);
  for (VertexId v = 0; v < n; ++v) d.bags[v].insert(v);
  return d;
}

}  // namespace

TcwBounds tcw_bounds(const Multigraph& g, int exact_cap) {
  int n = g.vertex_count();
  if (n < 1) throw InvalidInput("tcw_bounds: empty graph");
  if (exact_cap < 1) throw InvalidInput("tcw_bounds: exact_cap must be >= 1");
  if (n <= exact_cap) {
    std::vector<Tree> shards;
    for (int m = 1; m <= n; ++m)
      for (Tree& t : unlabeled_trees(m)) shards.push_back(std::move(t));
    // Shard the shape list across workers; the merge below is deterministic
    // because ties resolve by (shard, assignment) rank.
    int workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<int>(workers, static_cast<int>(shards.size()));
    std::vector<std::future<std::vector<ShardBest>>> futures;
    for (int wk = 0; wk < workers; ++wk)
      futures.push_back(std::async(std::launch::async, [&, wk] {
        std::vector<ShardBest> mine;
        for (std::size_t i = wk; i < shards.size(); i += workers)
          mine.push_back(scan_tree_shard(g, shards[i], static_cast<int>(i)));
        return mine;
      }));
    ShardBest best;
    for (auto& fu : futures)
      for (ShardBest& r : fu.get())
        if (r.shard >= 0 &&
            std::tuple(r.width, r.shard, r.index) <
                std::tuple(best.width, best.shard, best.index))
          best = std::move(r);
    TcwBounds out;
    out.witness.tree = shards[best.shard];
    out.witness.bags.resize(out.witness.tree.node_count);
    for (int v = 0; v < n; ++v) out.witness.bags[best.assign[v]].insert(v);
    if (width(g, out.witness).value != best.width)
      throw std::logic_error("exhaustive width does not match its witness");
    out.lower = out.upper = best.width;
    out.exact = true;
    return out;
  }
  // Heuristic regime: trivial single-bag candidate, singleton path, and the
  // bounded-degree conversion of an exact tree decomposition.
  std::vector<TreeCutDecomposition> candidates;
  candidates.push_back(
      TreeCutDecomposition{Tree{1, {}}, {all_vertices(g)}});
  candidates.push_back(singleton_path_decomposition(g));
  if (n <= 20 && g.edge_count() > 0 && is_connected(g)) {
    TreeDecompositionResult td = exact_tree_decomposition(g);
    candidates.push_back(
        convert_tree_decomposition(g, td.decomposition, g.max_degree()));
  }
  TcwBounds out;
  out.upper = std::numeric_limits<int>::max();
  for (TreeCutDecomposition& c : candidates) {
    int w = width(g, c).value;
    if (w < out.upper) {
      out.upper = w;
      out.witness = std::move(c);
    }
  }
  out.lower = n >= 2 ? 2 : 1;
  out.exact = out.lower == out.upper;
  return out;
}

}  // namespace mgs
