#pragma once

#include <optional>
#include <vector>

#include "mgs/flows.hpp"
#include "mgs/multigraph.hpp"

namespace mgs {

// An x-spider of order k: a body vertex outside x with k edge-disjoint legs,
// each a vertex-simple path from the body to x whose internal vertices
// avoid x.
struct Spider {
  VertexId body = -1;
  int order = 0;
  PathBundle legs;
};

// Witness that no x-spider of order k exists: a partition of V(g) - x into
// parts whose boundaries all have fewer than k edges. Any spider body would
// sit in some part and push k edge-disjoint legs across its boundary.
struct SpiderObstruction {
  std::vector<VertexSet> parts;
  int k = 0;
};

struct SpiderPacking {
  std::vector<Spider> spiders;
  std::optional<EdgeSet> hitting_set;
};

bool check_spider(const Multigraph& g, const VertexSet& x, const Spider& s);
bool check_obstruction(const Multigraph& g, const VertexSet& x,
                       const SpiderObstruction& o);

// Scans candidate bodies in increasing vertex id; for each, probes for k
// edge-disjoint paths to the consolidated x in consolidate(g, x). First
// success wins. Pass forbidden edge ids to search g minus those edges.
std::optional<Spider> find_spider(const Multigraph& g, const VertexSet& x,
                                  int k,
                                  const EdgeSet* forbidden = nullptr);

// Requires find_spider(g, x, k) == none (re-checked). Builds the partition
// from per-vertex minimal min-cut sides, made disjoint by posimodular
// uncrossing.
SpiderObstruction spider_obstruction(const Multigraph& g, const VertexSet& x,
                                     int k);

// Greedy: repeatedly find a spider avoiding all previously used edge ids.
// Either t pairwise edge-disjoint spiders, or every spider found so far plus
// a hitting set (the union of their edges) whose removal provably leaves no
// x-spider of order k.
SpiderPacking pack_spiders(const Multigraph& g, const VertexSet& x, int k,
                           int t);

}  // namespace mgs
