#include "mgs/spiders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mgs/errors.hpp"

namespace mgs {

namespace {

void check_x(const Multigraph& g, const VertexSet& x) {
  if (x.empty()) throw InvalidInput("spider: x is empty");
  for (VertexId v : x) g.check_vertex(v);
  if (static_cast<int>(x.size()) == g.vertex_count())
    throw InvalidInput("spider: x covers every vertex");
}

}  // namespace

bool check_spider(const Multigraph& g, const VertexSet& x, const Spider& s) {
  check_x(g, x);
  g.check_vertex(s.body);
  if (x.count(s.body)) return false;
  if (s.order < 1) return false;
  if (static_cast<int>(s.legs.paths.size()) != s.order) return false;
  if (!validate_path_bundle(g, s.legs)) return false;
  for (const Path& leg : s.legs.paths) {
    if (!is_simple_path(g, leg)) return false;
    auto verts = path_vertices(g, leg);
    if (verts.front() != s.body) return false;
    if (!x.count(verts.back())) return false;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
      if (x.count(verts[i])) return false;
  }
  return true;
}

bool check_obstruction(const Multigraph& g, const VertexSet& x,
                       const SpiderObstruction& o) {
  check_x(g, x);
  std::vector<char> covered(g.vertex_count(), 0);
  for (const VertexSet& part : o.parts) {
    if (part.empty()) return false;
    for (VertexId v : part) {
      g.check_vertex(v);
      if (x.count(v) || covered[v]) return false;
      covered[v] = 1;
    }
    if (static_cast<int>(delta(g, part).size()) >= o.k) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!x.count(v) && !covered[v]) return false;
  return true;
}

std::optional<Spider> find_spider(const Multigraph& g, const VertexSet& x,
                                  int k, const EdgeSet* forbidden) {
  check_x(g, x);
  if (k < 1) throw InvalidInput("spider: k >= 1 required");
  ConsolidateResult cons = consolidate(g, x);
  EdgeSet forbidden_new;
  if (forbidden)
    for (EdgeId e = 0; e < cons.graph.edge_count(); ++e)
      if (forbidden->count(cons.edge_origin[e])) forbidden_new.insert(e);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (x.count(v)) continue;
    VertexId src = cons.vertex_map[v];
    PathBundle probe = max_edge_disjoint_paths(
        cons.graph, src, cons.merged, k, forbidden ? &forbidden_new : nullptr);
    if (static_cast<int>(probe.paths.size()) < k) continue;
    Spider s;
    s.body = v;
    s.order = k;
    for (const Path& p : probe.paths) {
      Path leg{v, {}};
      for (EdgeId e : p.edges) leg.edges.push_back(cons.edge_origin[e]);
      s.legs.paths.push_back(leg);
    }
    if (!check_spider(g, x, s))
      throw std::logic_error("find_spider: produced spider fails its own check");
    return s;
  }
  return std::nullopt;
}

SpiderObstruction spider_obstruction(const Multigraph& g, const VertexSet& x,
                                     int k) {
  check_x(g, x);
  if (k < 1) throw InvalidInput("spider: k >= 1 required");
  if (find_spider(g, x, k))
    throw InvalidInput("spider_obstruction: a spider of that order exists");

  ConsolidateResult cons = consolidate(g, x);
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<VertexSet> sides;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (x.count(v) || covered[v]) continue;
    VertexSet w;
    if (g.degree(v) < k) {
      w.insert(v);  // low-degree vertices stand alone
    } else {
      CutSide cut = min_cut_side(cons.graph, cons.vertex_map[v], cons.merged);
      if (cut.size >= k)
        throw std::logic_error("spider_obstruction: large cut despite no spider");
      for (VertexId nv : cut.side)
        for (VertexId o = 0; o < g.vertex_count(); ++o)
          if (!x.count(o) && cons.vertex_map[o] == nv) w.insert(o);
    }
    for (VertexId o : w) covered[o] = 1;
    sides.push_back(std::move(w));
  }

  // Make the sides disjoint. Posimodularity of |delta|:
  //   |delta(A)| + |delta(B)| >= |delta(A - B)| + |delta(B - A)|,
  // so when both sides have boundary < k, one of the two differences does
  // too; replace the corresponding side by that difference. Every vertex
  // stays covered (the removed overlap remains in the other side) and the
  // total size strictly drops, which bounds the loop.
  auto side_delta = [&](const VertexSet& s) {
    return static_cast<int>(delta(g, s).size());
  };
  auto total_size = [&sides] {
    std::size_t n = 0;
    for (const VertexSet& s : sides) n += s.size();
    return n;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sides.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < sides.size() && !changed; ++j) {
        VertexSet inter;
        std::set_intersection(sides[i].begin(), sides[i].end(),
                              sides[j].begin(), sides[j].end(),
                              std::inserter(inter, inter.begin()));
        if (inter.empty()) continue;
        VertexSet i_minus, j_minus;
        std::set_difference(sides[i].begin(), sides[i].end(),
                            sides[j].begin(), sides[j].end(),
                            std::inserter(i_minus, i_minus.begin()));
        std::set_difference(sides[j].begin(), sides[j].end(),
                            sides[i].begin(), sides[i].end(),
                            std::inserter(j_minus, j_minus.begin()));
        std::size_t before = total_size();
        if (i_minus.empty()) {
          sides.erase(sides.begin() + i);
        } else if (j_minus.empty()) {
          sides.erase(sides.begin() + j);
        } else if (side_delta(i_minus) < k) {
          sides[i] = std::move(i_minus);
        } else if (side_delta(j_minus) < k) {
          sides[j] = std::move(j_minus);
        } else {
          throw std::logic_error("spider_obstruction: posimodularity violated");
        }
        if (total_size() >= before)
          throw std::logic_error("spider_obstruction: uncrossing did not shrink");
        changed = true;
      }
  }

  std::sort(sides.begin(), sides.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return *a.begin() < *b.begin();
            });
  SpiderObstruction o;
  o.parts = std::move(sides);
  o.k = k;
  if (!check_obstruction(g, x, o))
    throw std::logic_error("spider_obstruction: result fails its own check");
  return o;
}

SpiderPacking pack_spiders(const Multigraph& g, const VertexSet& x, int k,
                           int t) {
  check_x(g, x);
  if (k < 1) throw InvalidInput("spider: k >= 1 required");
  if (t < 0) throw InvalidInput("spider: t >= 0 required");
  SpiderPacking packing;
  EdgeSet used;
  while (static_cast<int>(packing.spiders.size()) < t) {
    std::optional<Spider> s = find_spider(g, x, k, &used);
    if (!s) break;
    for (const Path& leg : s->legs.paths)
      used.insert(leg.edges.begin(), leg.edges.end());
    packing.spiders.push_back(std::move(*s));
  }
  if (static_cast<int>(packing.spiders.size()) < t) {
    if (find_spider(g, x, k, &used))
      throw std::logic_error("pack_spiders: hitting set fails to hit");
    packing.hitting_set = used;
  }
  return packing;
}

}  // namespace mgs
