#pragma once

#include <optional>
#include <vector>

#include "mgs/multigraph.hpp"

namespace mgs {

// A separation (A, B): every edge on exactly one side, every vertex on at
// least one. vertex_side must contain each edge-forced membership and may
// additionally declare a vertex into the side it has no edges in (a vertex
// present in both sides is boundary). Such declarations are what let e.g.
// ({v}, G) exist as an order-1 separation.
struct Separation {
  std::vector<char> edge_side;    // per edge id: 0 = A, 1 = B
  std::vector<char> vertex_side;  // per vertex id: 1 = A, 2 = B, 3 = both

  bool operator==(const Separation&) const = default;
  bool operator<(const Separation& o) const {
    if (edge_side != o.edge_side) return edge_side < o.edge_side;
    return vertex_side < o.vertex_side;
  }
};

bool check_separation(const Multigraph& g, const Separation& s);
Separation flip(const Separation& s);
VertexSet separation_boundary(const Separation& s);
int separation_order(const Separation& s);
VertexSet side_a_vertices(const Separation& s);
VertexSet side_b_vertices(const Separation& s);

// Branch sets of a clique-minor model: disjoint, connected, pairwise joined
// by an edge.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
  int target = 0;  // clique size, must equal branch_sets.size()
};

bool check_minor_model(const Multigraph& g, const MinorModel& m);

struct KStar {
  VertexId center = -1;
  EdgeSet edges;
};

bool check_kstar(const Multigraph& g, const KStar& s);

// Orientation of all low-order separations. Explicit members when the host
// is small enough to enumerate; a minor model acts as a lazy orientation
// oracle otherwise ((A,B) in T iff some branch set lies in V(B) - V(A)).
struct Tangle {
  int order = 0;
  bool materialized = false;
  std::vector<Separation> members;  // sorted when materialized
  std::optional<MinorModel> model;
};

// All separations of order <= max_order. Hard cap |E(g)| <= 18.
std::vector<Separation> enumerate_separations(const Multigraph& g,
                                              int max_order);

struct TangleCheck {
  bool ok = false;
  int violated_axiom = 0;  // 1, 2 or 3 when !ok
};

// Axioms, checked exhaustively: (i) every separation of order < theta is
// oriented exactly one way, (ii) no three A-sides cover g, (iii) no A-side
// spans all vertices.
TangleCheck is_tangle(const Multigraph& g,
                      const std::vector<Separation>& members, int theta);

// Tangle of order k induced by a clique-minor model with 2*target >= 3*k.
// Materialized when the enumeration cap allows.
Tangle induced_tangle(const Multigraph& g, const MinorModel& model, int k);

bool tangle_contains(const Multigraph& g, const Tangle& t,
                     const Separation& s);

// Observation: shifting the edges induced on the boundary over to the A side
// keeps the separation in any tangle that contains it.
Separation closure_shift(const Multigraph& g, const Separation& s);

struct TangleMinusResult {
  SubgraphResult host;  // g - z, with origin maps
  Tangle tangle;        // order(t) - |z|, on host.graph
};

// Restriction T - z: members with z inside the boundary, cut down to g - z.
TangleMinusResult tangle_minus(const Multigraph& g, const Tangle& t,
                               const VertexSet& z);

struct FreeResult {
  bool free = false;
  std::optional<Separation> witness;  // order < |x| with x inside V(A)
};

// x is free when no tangle member of order < |x| holds x in its A side.
// Materialized tangles are scanned directly; oracle tangles are decided by
// enumerating candidate boundaries S, |S| < |x|: a violating member exists
// iff some branch set avoids S inside a component of g - S free of x.
FreeResult is_free(const Multigraph& g, const Tangle& t, const VertexSet& x);

// The separation of line_graph(g) cut out by U: A-side carries the edges
// inside U, B-side the edges outside, and delta(U) is the boundary. Its
// order is |delta(g, u)|.
Separation canonical_separation(const Multigraph& g, const VertexSet& u);

struct StarVerdict {
  std::optional<KStar> free_star;
  std::optional<std::vector<VertexSet>> partition;
};

// Dichotomy for tangles on line graphs: either some k-star centered in u is
// free with respect to t, or u is covered by disjoint vertex sets with
// boundary < k whose canonical separations all belong to t.
StarVerdict verify_star_characterization(const Multigraph& g, const Tangle& t,
                                         const VertexSet& u, int k);

}  // namespace mgs
