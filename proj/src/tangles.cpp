#include "mgs/tangles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mgs/errors.hpp"

namespace mgs {

namespace {

constexpr int kSeparationEdgeCap = 18;
constexpr std::size_t kSeparationCountCap = 5'000'000;

void check_sizes(const Multigraph& g, const Separation& s) {
  if (static_cast<int>(s.edge_side.size()) != g.edge_count() ||
      static_cast<int>(s.vertex_side.size()) != g.vertex_count())
    throw InvalidInput("separation: side vectors do not match the graph");
}

std::vector<char> forced_sides(const Multigraph& g,
                               const std::vector<char>& edge_side) {
  std::vector<char> forced(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    char bit = edge_side[e] ? 2 : 1;
    forced[g.edge(e).u] |= bit;
    forced[g.edge(e).v] |= bit;
  }
  return forced;
}

}  // namespace

bool check_separation(const Multigraph& g, const Separation& s) {
  check_sizes(g, s);
  for (char c : s.edge_side)
    if (c != 0 && c != 1) return false;
  std::vector<char> forced = forced_sides(g, s.edge_side);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    char side = s.vertex_side[v];
    if (side < 1 || side > 3) return false;
    if ((forced[v] & side) != forced[v]) return false;
  }
  return true;
}

Separation flip(const Separation& s) {
  Separation f = s;
  for (char& c : f.edge_side) c ^= 1;
  for (char& c : f.vertex_side)
    if (c != 3) c = c == 1 ? 2 : 1;
  return f;
}

VertexSet separation_boundary(const Separation& s) {
  VertexSet b;
  for (std::size_t v = 0; v < s.vertex_side.size(); ++v)
    if (s.vertex_side[v] == 3) b.insert(static_cast<VertexId>(v));
  return b;
}

int separation_order(const Separation& s) {
  return static_cast<int>(
      std::count(s.vertex_side.begin(), s.vertex_side.end(), 3));
}

VertexSet side_a_vertices(const Separation& s) {
  VertexSet a;
  for (std::size_t v = 0; v < s.vertex_side.size(); ++v)
    if (s.vertex_side[v] & 1) a.insert(static_cast<VertexId>(v));
  return a;
}

VertexSet side_b_vertices(const Separation& s) {
  VertexSet b;
  for (std::size_t v = 0; v < s.vertex_side.size(); ++v)
    if (s.vertex_side[v] & 2) b.insert(static_cast<VertexId>(v));
  return b;
}

bool check_minor_model(const Multigraph& g, const MinorModel& m) {
  if (m.target != static_cast<int>(m.branch_sets.size())) return false;
  if (m.branch_sets.empty()) return false;
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    const VertexSet& d = m.branch_sets[i];
    if (d.empty()) return false;
    for (VertexId v : d) {
      g.check_vertex(v);
      if (owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
    if (!induces_connected(g, d)) return false;
  }
  std::vector<char> joined(m.branch_sets.size() * m.branch_sets.size(), 0);
  for (const Edge& e : g.edges()) {
    int a = owner[e.u], b = owner[e.v];
    if (a >= 0 && b >= 0 && a != b) {
      joined[a * m.branch_sets.size() + b] = 1;
      joined[b * m.branch_sets.size() + a] = 1;
    }
  }
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i)
    for (std::size_t j = i + 1; j < m.branch_sets.size(); ++j)
      if (!joined[i * m.branch_sets.size() + j]) return false;
  return true;
}

bool check_kstar(const Multigraph& g, const KStar& s) {
  g.check_vertex(s.center);
  if (s.edges.empty()) return false;
  for (EdgeId e : s.edges) {
    if (e < 0 || e >= g.edge_count())
      throw InvalidInput("k-star: dangling edge id " + std::to_string(e));
    const Edge& ed = g.edge(e);
    if (ed.u != s.center && ed.v != s.center) return false;
  }
  return true;
}

std::vector<Separation> enumerate_separations(const Multigraph& g,
                                              int max_order) {
  if (g.edge_count() > kSeparationEdgeCap)
    throw CapExceeded("separation enumeration: more than " +
                      std::to_string(kSeparationEdgeCap) + " edges");
  std::vector<Separation> out;
  if (max_order < 0) return out;
  int m = g.edge_count();
  int n = g.vertex_count();
  Separation s;
  s.edge_side.resize(m);
  s.vertex_side.resize(n);

  // For each edge bipartition, every vertex must take at least its forced
  // sides; any vertex may be promoted to the boundary, and each promotion
  // costs order. Degree-0 vertices choose a side freely.
  std::vector<char> forced;
  auto assign = [&](auto&& self, int v, int boundary) -> void {
    if (boundary > max_order) return;
    if (v == n) {
      if (out.size() >= kSeparationCountCap)
        throw CapExceeded("separation enumeration: output too large");
      out.push_back(s);
      return;
    }
    static constexpr char kChoices[4][3] = {
        {1, 2, 3}, {1, 3, 0}, {2, 3, 0}, {3, 0, 0}};
    for (char c : kChoices[static_cast<int>(forced[v])]) {
      if (c == 0) break;
      s.vertex_side[v] = c;
      self(self, v + 1, boundary + (c == 3 ? 1 : 0));
    }
  };
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    for (EdgeId e = 0; e < m; ++e) s.edge_side[e] = (mask >> e) & 1;
    forced = forced_sides(g, s.edge_side);
    assign(assign, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct SideProfile {
  unsigned edges = 0;
  unsigned verts = 0;
};

bool profile_covers(const SideProfile& a, const SideProfile& b,
                    const SideProfile& c, unsigned all_edges,
                    unsigned all_verts) {
  return (a.edges | b.edges | c.edges) == all_edges &&
         (a.verts | b.verts | c.verts) == all_verts;
}

}  // namespace

TangleCheck is_tangle(const Multigraph& g,
                      const std::vector<Separation>& members, int theta) {
  if (theta < 1) throw InvalidInput("tangle order must be >= 1");
  if (g.vertex_count() > 32)
    throw CapExceeded("tangle check: more than 32 vertices");
  for (const Separation& s : members)
    if (!check_separation(g, s)) throw InvalidInput("tangle member malformed");

  std::vector<Separation> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  auto contains = [&](const Separation& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };

  // axiom i — an orientation of exactly the separations of order < theta
  for (const Separation& s : members)
    if (separation_order(s) >= theta) return {false, 1};
  for (const Separation& s : enumerate_separations(g, theta - 1)) {
    int c = (contains(s) ? 1 : 0) + (contains(flip(s)) ? 1 : 0);
    if (c != 1) return {false, 1};
  }

  // axiom ii — no three A sides cover g; dominated profiles are dropped
  // first since only maximal ones can witness a cover
  unsigned all_edges = g.edge_count() == 32 ? ~0u : (1u << g.edge_count()) - 1;
  unsigned all_verts =
      g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1;
  std::vector<SideProfile> profiles;
  for (const Separation& s : members) {
    SideProfile p;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (s.edge_side[e] == 0) p.edges |= 1u << e;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (s.vertex_side[v] & 1) p.verts |= 1u << v;
    profiles.push_back(p);
  }
  std::vector<SideProfile> maximal;
  for (const SideProfile& p : profiles) {
    bool dominated = false;
    for (const SideProfile& q : profiles)
      if ((p.edges != q.edges || p.verts != q.verts) &&
          (p.edges & q.edges) == p.edges && (p.verts & q.verts) == p.verts) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(p);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const SideProfile& a, const SideProfile& b) {
              return std::tie(a.edges, a.verts) < std::tie(b.edges, b.verts);
            });
  maximal.erase(std::unique(maximal.begin(), maximal.end(),
                            [](const SideProfile& a, const SideProfile& b) {
                              return a.edges == b.edges && a.verts == b.verts;
                            }),
                maximal.end());
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i; j < maximal.size(); ++j)
      for (std::size_t l = j; l < maximal.size(); ++l)
        if (profile_covers(maximal[i], maximal[j], maximal[l], all_edges,
                           all_verts))
          return {false, 2};

  // axiom iii — no A side spans every vertex
  for (const Separation& s : members) {
    bool full = true;
    for (VertexId v = 0; v < g.vertex_count() && full; ++v)
      if (!(s.vertex_side[v] & 1)) full = false;
    if (full) return {false, 3};
  }
  return {true, 0};
}

namespace {

bool oriented_by_model(const MinorModel& model, const Separation& s) {
  for (const VertexSet& d : model.branch_sets) {
    bool inside = true;
    for (VertexId v : d)
      if (s.vertex_side[v] != 2) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

}  // namespace

Tangle induced_tangle(const Multigraph& g, const MinorModel& model, int k) {
  if (k < 1) throw InvalidInput("tangle order must be >= 1");
  if (!check_minor_model(g, model))
    throw InvalidInput("induced_tangle: invalid minor model");
  if (2 * model.target < 3 * k)
    throw InvalidInput("induced_tangle: model needs >= 3k/2 branch sets");
  Tangle t;
  t.order = k;
  t.model = model;
  if (g.edge_count() <= kSeparationEdgeCap) {
    for (const Separation& s : enumerate_separations(g, k - 1)) {
      bool fwd = oriented_by_model(model, s);
      bool bwd = oriented_by_model(model, flip(s));
      if (fwd == bwd)
        throw std::logic_error("induced_tangle: model fails to orient");
      t.members.push_back(fwd ? s : flip(s));
    }
    // both orientations of each separation were scanned, so every member
    // arrived twice
    std::sort(t.members.begin(), t.members.end());
    t.members.erase(std::unique(t.members.begin(), t.members.end()),
                    t.members.end());
    t.materialized = true;
  }
  return t;
}

bool tangle_contains(const Multigraph& g, const Tangle& t,
                     const Separation& s) {
  if (!check_separation(g, s)) throw InvalidInput("not a separation");
  if (separation_order(s) >= t.order) return false;
  if (t.materialized)
    return std::binary_search(t.members.begin(), t.members.end(), s);
  if (t.model) return oriented_by_model(*t.model, s);
  throw InvalidInput("tangle has neither members nor a model");
}

Separation closure_shift(const Multigraph& g, const Separation& s) {
  if (!check_separation(g, s)) throw InvalidInput("not a separation");
  Separation out = s;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (s.vertex_side[g.edge(e).u] == 3 && s.vertex_side[g.edge(e).v] == 3)
      out.edge_side[e] = 0;
  return out;
}

TangleMinusResult tangle_minus(const Multigraph& g, const Tangle& t,
                               const VertexSet& z) {
  for (VertexId v : z) g.check_vertex(v);
  if (static_cast<int>(z.size()) >= t.order)
    throw InvalidInput("tangle_minus: |z| must be below the tangle order");
  if (static_cast<int>(z.size()) == g.vertex_count())
    throw InvalidInput("tangle_minus: z removes every vertex");
  if (!t.materialized)
    throw CapExceeded("tangle_minus: tangle is not materialized");

  VertexSet keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!z.count(v)) keep.insert(v);
  TangleMinusResult out{induced_subgraph(g, keep), {}};
  const SubgraphResult& host = out.host;

  std::vector<Separation> mapped;
  for (const Separation& s : t.members) {
    bool z_on_boundary = true;
    for (VertexId v : z)
      if (s.vertex_side[v] != 3) {
        z_on_boundary = false;
        break;
      }
    if (!z_on_boundary) continue;
    Separation m;
    m.edge_side.resize(host.graph.edge_count());
    m.vertex_side.resize(host.graph.vertex_count());
    for (EdgeId e = 0; e < host.graph.edge_count(); ++e)
      m.edge_side[e] = s.edge_side[host.edge_origin[e]];
    for (VertexId v = 0; v < host.graph.vertex_count(); ++v)
      m.vertex_side[v] = s.vertex_side[host.vertex_origin[v]];
    mapped.push_back(std::move(m));
  }
  std::sort(mapped.begin(), mapped.end());
  mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());

  out.tangle.order = t.order - static_cast<int>(z.size());
  out.tangle.members = std::move(mapped);
  out.tangle.materialized = true;
  return out;
}

FreeResult is_free(const Multigraph& g, const Tangle& t, const VertexSet& x) {
  for (VertexId v : x) g.check_vertex(v);
  if (static_cast<int>(x.size()) > t.order)
    throw InvalidInput("is_free: |x| exceeds the tangle order");
  if (x.empty()) return {true, std::nullopt};

  if (t.materialized) {
    for (const Separation& s : t.members) {
      if (separation_order(s) >= static_cast<int>(x.size())) continue;
      bool inside = true;
      for (VertexId v : x)
        if (!(s.vertex_side[v] & 1)) {
          inside = false;
          break;
        }
      if (inside) return {false, s};
    }
    return {true, std::nullopt};
  }
  if (!t.model) throw InvalidInput("tangle has neither members nor a model");
  if (g.vertex_count() > 32 || x.size() > 9)
    throw CapExceeded("is_free: oracle scan too large");

  // A violating member (A, B) has boundary S with |S| < |x|; its exclusive
  // B side is a union of components of g - S, one of which holds a branch
  // set, and x stays on the A side, so those components avoid x. Scan all
  // candidate boundaries by size, then build the witness directly.
  int n = g.vertex_count();
  for (int size = 0; size < static_cast<int>(x.size()); ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      VertexSet sset(comb.begin(), comb.end());
      VertexSet rest;
      for (VertexId v = 0; v < n; ++v)
        if (!sset.count(v)) rest.insert(v);
      if (!rest.empty()) {
        SubgraphResult sub = induced_subgraph(g, rest);
        std::vector<std::vector<VertexId>> comps = components(sub.graph);
        std::vector<int> comp_of(n, -1);
        std::vector<char> comp_has_x(comps.size(), 0);
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
          for (VertexId v : comps[ci]) {
            VertexId ov = sub.vertex_origin[v];
            comp_of[ov] = static_cast<int>(ci);
            if (x.count(ov)) comp_has_x[ci] = 1;
          }
        for (const VertexSet& d : t.model->branch_sets) {
          VertexId rep = *d.begin();
          if (sset.count(rep)) continue;
          bool hits_s = false;
          for (VertexId v : d)
            if (sset.count(v)) {
              hits_s = true;
              break;
            }
          if (hits_s || comp_has_x[comp_of[rep]]) continue;
          int target = comp_of[rep];
          Separation w;
          w.edge_side.resize(g.edge_count());
          w.vertex_side.assign(n, 1);
          for (VertexId v = 0; v < n; ++v) {
            if (sset.count(v))
              w.vertex_side[v] = 3;
            else if (comp_of[v] == target)
              w.vertex_side[v] = 2;
          }
          for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            bool touches_b = (!sset.count(ed.u) && comp_of[ed.u] == target) ||
                             (!sset.count(ed.v) && comp_of[ed.v] == target);
            w.edge_side[e] = touches_b ? 1 : 0;
          }
          if (!tangle_contains(g, t, w))
            throw std::logic_error("is_free: witness not oriented as built");
          return {false, w};
        }
      }
      // next lexicographic combination
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return {true, std::nullopt};
}

Separation canonical_separation(const Multigraph& g, const VertexSet& u) {
  if (u.empty() || static_cast<int>(u.size()) == g.vertex_count())
    throw InvalidInput("canonical separation needs a proper nonempty set");
  for (VertexId v : u) g.check_vertex(v);
  Multigraph lg = line_graph(g);
  Separation s;
  s.edge_side.resize(lg.edge_count());
  s.vertex_side.resize(lg.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int ends_in_u = (u.count(g.edge(e).u) ? 1 : 0) + (u.count(g.edge(e).v) ? 1 : 0);
    s.vertex_side[e] = ends_in_u == 2 ? 1 : ends_in_u == 1 ? 3 : 2;
  }
  for (EdgeId le = 0; le < lg.edge_count(); ++le) {
    char cu = s.vertex_side[lg.edge(le).u];
    char cv = s.vertex_side[lg.edge(le).v];
    if ((cu == 1 && cv == 2) || (cu == 2 && cv == 1))
      throw std::logic_error("canonical separation: impossible line edge");
    // edges among delta(u) stay on the A side; anything touching the
    // outside goes to B
    s.edge_side[le] = (cu == 2 || cv == 2) ? 1 : 0;
  }
  if (separation_order(s) != static_cast<int>(delta(g, u).size()))
    throw std::logic_error("canonical separation: order != |delta(u)|");
  if (!check_separation(lg, s))
    throw std::logic_error("canonical separation: malformed result");
  return s;
}

namespace {

bool cover_search(const std::vector<VertexSet>& good, const VertexSet& u,
                  std::vector<char>& taken, int vertex_count,
                  std::vector<VertexSet>& chosen) {
  VertexId y = -1;
  for (VertexId v : u)
    if (!taken[v]) {
      y = v;
      break;
    }
  if (y == -1) return true;
  for (const VertexSet& w : good) {
    if (!w.count(y)) continue;
    bool clash = false;
    for (VertexId v : w)
      if (taken[v]) {
        clash = true;
        break;
      }
    if (clash) continue;
    for (VertexId v : w) taken[v] = 1;
    chosen.push_back(w);
    if (cover_search(good, u, taken, vertex_count, chosen)) return true;
    chosen.pop_back();
    for (VertexId v : w) taken[v] = 0;
  }
  return false;
}

}  // namespace

StarVerdict verify_star_characterization(const Multigraph& g, const Tangle& t,
                                         const VertexSet& u, int k) {
  for (VertexId v : u) g.check_vertex(v);
  if (k < 1 || k >= t.order)
    throw InvalidInput("star characterization: need 1 <= k < tangle order");
  StarVerdict verdict;
  if (u.empty()) {
    verdict.partition.emplace();
    return verdict;
  }
  Multigraph lg = line_graph(g);

  // Any free k-star settles the dichotomy on the star side.
  for (VertexId c : u) {
    const std::vector<EdgeId>& inc = g.incident(c);
    if (static_cast<int>(inc.size()) < k) continue;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      VertexSet star_vertices;
      for (int i : comb) star_vertices.insert(inc[i]);
      if (is_free(lg, t, star_vertices).free) {
        KStar star;
        star.center = c;
        for (int i : comb) star.edges.insert(inc[i]);
        verdict.free_star = star;
        return verdict;
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == static_cast<int>(inc.size()) - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  // Otherwise assemble disjoint small-boundary sets covering u whose
  // canonical separations the tangle orients; the characterization
  // guarantees such a cover exists.
  if (g.vertex_count() > 16)
    throw CapExceeded("star characterization: too many vertices");
  std::vector<VertexSet> good;
  for (unsigned mask = 1; mask + 1 < (1u << g.vertex_count()); ++mask) {
    VertexSet w;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (mask & (1u << v)) w.insert(v);
    if (static_cast<int>(delta(g, w).size()) >= k) continue;
    if (!tangle_contains(lg, t, canonical_separation(g, w))) continue;
    good.push_back(std::move(w));
  }
  std::stable_sort(good.begin(), good.end(),
                   [](const VertexSet& a, const VertexSet& b) {
                     return a.size() < b.size();
                   });
  std::vector<char> taken(g.vertex_count(), 0);
  std::vector<VertexSet> chosen;
  if (!cover_search(good, u, taken, g.vertex_count(), chosen))
    throw std::logic_error("star characterization: dichotomy failed");
  verdict.partition = std::move(chosen);
  return verdict;
}

}  // namespace mgs
