#pragma once

#include <optional>
#include <vector>

#include "mgs/multigraph.hpp"

namespace mgs {

struct LinearOrder {
  std::vector<VertexId> order;  // permutation of V
};

// Max over interior positions i of the number of edges joining the strict
// prefix before v_i to the strict suffix after it; edges incident to v_i do
// not count. 0 when |V| <= 2 (no interior position exists).
int hop_width_of_order(const Multigraph& g, const LinearOrder& ord);

// Classic cut-width of the order: max over prefixes of the edge boundary.
// Differs from hop width exactly by the frontier-incident edges.
int cut_width_of_order(const Multigraph& g, const LinearOrder& ord);

struct HopWidth {
  int value = 0;
  LinearOrder order;
  bool exact = false;  // false beyond the subset-DP cap (|V| > 18)
};

HopWidth min_hop_width(const Multigraph& g);

// Simple graph on V(g) with an edge wherever g has >= p parallel edges.
Multigraph parallel_graph_R(const Multigraph& g, int p);

struct Clump {
  VertexSet j_vertices;
  VertexSet x_subset;
  int threshold = 0;  // the edge-connectivity / multiplicity parameter
};

enum class ClumpCondition { none, x, a, b, c, d, e, f };

struct ClumpCheck {
  bool ok = false;
  ClumpCondition violated = ClumpCondition::none;
};

// Evaluates the clump conditions literally against g and r, where r must
// equal parallel_graph_R(g, c.threshold):
//   x: X nonempty and contained in J
//   a: if |V(J)| != 1 then g[J] is threshold-edge-connected
//   b: every component of r is contained in or disjoint from V(J)
//   c: if V(J)\X is nonempty, every x in X sends >= threshold edges into it
//   d: if |V(J)\X| >= 2 then g[J\X] is threshold-edge-connected and |X| >= 2
//   e: if V(J)\X is empty then |V(J)| = |X| = 1
//   f: if |V(J)| >= 3 then |X| >= (number of r-components inside J) + 1
ClumpCheck check_clump(const Multigraph& g, const Multigraph& r,
                       const Clump& c);

// Branch sets of a star minor: a connected center and disjoint connected
// leaves, each adjacent to the center.
struct StarMinor {
  VertexSet center;
  std::vector<VertexSet> leaves;
};

bool check_star_minor(const Multigraph& r, const StarMinor& m, int l);

// Outcome of the path-structure dichotomy: either a star minor with l
// leaves, or a set X with |X| < 4l whose removal leaves at most 2l
// components, every one a path attached to X only at its endpoints.
struct PathStructure {
  std::optional<StarMinor> minor;
  VertexSet x_set;
  std::vector<std::vector<VertexId>> paths;  // each in path order
};

PathStructure k1l_path_structure(const Multigraph& r, int l);

struct StructureBounds {
  long long a_max = 0;
  long long z_max = 0;
  long long comp_max = 0;
  long long hop_max = 0;
};

// The preset (4t^2, 6t^10, 2t^2, 2t^6); t capped at 65 to stay in range.
StructureBounds paper_bounds(long long t);

struct StructureCertificate {
  VertexSet a_set;
  EdgeSet z_set;
  // One order per component of (g - z_set) - a_set, matched by vertex set.
  std::vector<LinearOrder> component_orders;
  StructureBounds bounds;
};

enum class StructureViolation { none, cond1_a, cond1_z, cond2, cond3, cond4 };

struct StructureCheck {
  bool ok = false;
  StructureViolation violated = StructureViolation::none;
};

// Conditions, checked in this order:
//   1: |A| <= a_max (cond1_a) and |Z| <= z_max (cond1_z)
//   2: (g - Z) - A has at most comp_max components
//   3: within each component order, only the first and last vertex may have
//      a (g - Z)-neighbor in A
//   4: each order has hop-width at most hop_max in its component
StructureCheck verify_structure_certificate(const Multigraph& g,
                                            const StructureCertificate& cert);

// Certificate search pipeline: build R at threshold p, run the
// path-structure dichotomy with parameter l on every R-component to obtain
// A, delete cross-path edges (Z1) and A-to-interior edges (Z2), order each
// surviving component along its R-path. Returns nothing if some R-component
// yields a star minor or the result fails verification against `bounds`.
std::optional<StructureCertificate> search_structure_certificate(
    const Multigraph& g, int p, int l, const StructureBounds& bounds);

}  // namespace mgs
