#pragma once

#include <utility>
#include <vector>

#include "mgs/multigraph.hpp"

namespace mgs {

struct Tree {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

bool check_tree(const Tree& t);

// Bags form a near-partition of V(g): pairwise disjoint, union everything,
// empty bags allowed.
struct TreeCutDecomposition {
  Tree tree;
  std::vector<VertexSet> bags;
};

bool check_tree_cut(const Multigraph& g, const TreeCutDecomposition& d);

// Standard tree decomposition (bags may overlap); input side of the
// conversion below.
struct TreeDecomposition {
  Tree tree;
  std::vector<VertexSet> bags;
};

bool check_tree_decomposition(const Multigraph& g,
                              const TreeDecomposition& d);

// Max over tree edges of the boundary of one side's bag union; 0 for a
// single-node tree.
int adhesion(const Multigraph& g, const TreeCutDecomposition& d);

// Torso at a node: consolidate the bag union of every neighbor component
// into one peripheral vertex (an empty union yields an isolated peripheral
// vertex, so |V(torso)| = |bag| + #neighbor components). Core vertices come
// first, in ascending original id.
struct Torso {
  Multigraph graph;
  VertexSet core;
  VertexSet peripheral;
  std::vector<VertexId> core_origin;  // torso id -> g vertex, core part only
};

Torso torso(const Multigraph& g, const TreeCutDecomposition& d, int node);

// Simplified width: max of adhesion and torso orders. The simplification is
// only faithful on 3-edge-connected graphs; simplified_ok flags that.
struct WidthResult {
  int value = 0;
  bool simplified_ok = false;
};

WidthResult width(const Multigraph& g, const TreeCutDecomposition& d);

// True iff every torso has at most a vertices of degree >= b.
bool check_bounded_degree_torsos(const Multigraph& g,
                                 const TreeCutDecomposition& d, int a, int b);

struct TcwBounds {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  TreeCutDecomposition witness;
};

// Exhaustive (all trees up to |V| nodes x all bag assignments) when
// |V(g)| <= exact_cap; otherwise the upper bound comes from converting an
// exact tree decomposition and the lower bound is the trivial one.
TcwBounds tcw_bounds(const Multigraph& g, int exact_cap = 7);

struct TreeDecompositionResult {
  TreeDecomposition decomposition;
  int width = 0;
};

// Minimum-width tree decomposition by dynamic programming over elimination
// prefixes. Cap |V| <= 20.
TreeDecompositionResult exact_tree_decomposition(const Multigraph& g);

// Root the tree decomposition and send each vertex to the root-most bag
// containing it. Output adhesion <= (2w+2)*d_max and torsos <=
// (d_max+1)(w+1) vertices, both asserted.
TreeCutDecomposition convert_tree_decomposition(const Multigraph& g,
                                                const TreeDecomposition& td,
                                                int d_max);

}  // namespace mgs
