#pragma once

#include <vector>

#include "mgs/multigraph.hpp"

namespace mgs {

// Walk encoded as a start vertex plus consecutive edge ids.
struct Path {
  VertexId start = -1;
  std::vector<EdgeId> edges;
};

VertexId path_end(const Multigraph& g, const Path& p);
std::vector<VertexId> path_vertices(const Multigraph& g, const Path& p);
// Consecutive edges share a vertex and no edge id repeats.
bool is_walk(const Multigraph& g, const Path& p);
bool is_simple_path(const Multigraph& g, const Path& p);

struct PathBundle {
  std::vector<Path> paths;
};

// Every path is a walk and the paths are pairwise edge-id-disjoint.
bool validate_path_bundle(const Multigraph& g, const PathBundle& b);

struct CutSide {
  VertexSet side;      // contains s, not t; minimal for the final flow
  EdgeSet cut_edges;   // delta(side)
  int size = 0;
};

// Unit capacity per edge id. Returns min(limit, lambda(s,t)) pairwise
// edge-disjoint s-t paths, each vertex-simple. Edges in `forbidden` carry
// capacity zero. limit < 0 means unlimited.
PathBundle max_edge_disjoint_paths(const Multigraph& g, VertexId s, VertexId t,
                                   int limit = -1,
                                   const EdgeSet* forbidden = nullptr);

// Source side of a minimum s-t cut: the residual-reachable set of s after a
// maximum flow, which is the unique minimal minimizer.
CutSide min_cut_side(const Multigraph& g, VertexId s, VertexId t,
                     const EdgeSet* forbidden = nullptr);

// Global edge connectivity; 0 for disconnected graphs. Requires >= 2 vertices.
int edge_connectivity(const Multigraph& g);

}  // namespace mgs
