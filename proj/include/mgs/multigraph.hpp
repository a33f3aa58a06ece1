#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mgs/errors.hpp"

namespace mgs {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

struct Edge {
  EdgeId id;
  VertexId u, v;
};

// Loop-free multigraph with dense edge ids 0..m-1. Parallel edges are
// distinct objects; "edge-disjoint" anywhere in this library means
// disjoint as sets of edge ids.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count,
             const std::vector<std::pair<VertexId, VertexId>>& endpoints);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids incident to v, ascending.
  const std::vector<EdgeId>& incident(VertexId v) const;
  int degree(VertexId v) const;
  int max_degree() const;
  VertexId other_end(EdgeId e, VertexId at) const;
  int multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }

  void check_vertex(VertexId v) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Edge ids with exactly one endpoint in x.
EdgeSet delta(const Multigraph& g, const VertexSet& x);

// Vertices outside x adjacent to x.
VertexSet neighborhood(const Multigraph& g, const VertexSet& x);

struct ConsolidateResult {
  Multigraph graph;
  VertexId merged;                   // id of the new vertex
  std::vector<VertexId> vertex_map;  // old id -> new id; x maps to `merged`
  std::vector<EdgeId> edge_origin;   // new edge id -> old edge id
};

// Identify x to one vertex, delete edges inside x, keep parallels.
// Survivor vertices keep their relative order; the merged vertex is last.
ConsolidateResult consolidate(const Multigraph& g, const VertexSet& x);

// Same quotient, but requires g[x] connected.
ConsolidateResult contract(const Multigraph& g, const VertexSet& x);

// Simple graph whose vertex k is g's edge k; vertices adjacent iff the
// underlying edges share an endpoint in g.
Multigraph line_graph(const Multigraph& g);

// Path on n vertices 0..n-1 with k parallel edges per consecutive pair.
Multigraph gen_parallel_path(int k, int n);

// Star with spokes 0..m-1, hub m, and l parallel edges per spoke.
Multigraph gen_parallel_star(int l, int m);

// Seed-deterministic loop-free multigraph: exactly edge_budget edges,
// pairwise multiplicity at most max_multiplicity, canonical edge order.
Multigraph gen_random(std::uint64_t seed, int n, int edge_budget,
                      int max_multiplicity);

std::vector<std::vector<VertexId>> components(const Multigraph& g);
bool is_connected(const Multigraph& g);
bool induces_connected(const Multigraph& g, const VertexSet& x);

struct SubgraphResult {
  Multigraph graph;
  std::vector<VertexId> vertex_origin;  // new -> old
  std::vector<VertexId> vertex_map;     // old -> new, -1 if dropped
  std::vector<EdgeId> edge_origin;      // new -> old
};

SubgraphResult induced_subgraph(const Multigraph& g, const VertexSet& keep);

// Drop the given edge ids; vertex ids are preserved, edge ids renumbered.
SubgraphResult remove_edges(const Multigraph& g, const EdgeSet& drop);

// One edge per adjacent vertex pair.
Multigraph underlying_simple(const Multigraph& g);

VertexSet all_vertices(const Multigraph& g);
VertexSet complement_vertices(const Multigraph& g, const VertexSet& x);

}  // namespace mgs
