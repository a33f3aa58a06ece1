#pragma once

#include <optional>
#include <vector>

#include "mgs/flows.hpp"
#include "mgs/multigraph.hpp"

namespace mgs {

enum class ImmersionMode { weak, strong };

// Witness that h immerses into g: an injective branch map on V(h) plus one
// vertex-simple composite path per h-edge, pairwise edge-id-disjoint. In
// strong mode no branch vertex is internal to any composite path.
struct ImmersionCertificate {
  ImmersionMode mode = ImmersionMode::weak;
  std::vector<VertexId> branch;   // indexed by h vertex id
  std::vector<Path> composite;    // indexed by h edge id
};

// False for a well-formed certificate that fails a condition; InvalidInput
// for dangling ids or size mismatches.
bool check_immersion(const Multigraph& g, const Multigraph& h,
                     const ImmersionCertificate& cert);

enum class SearchStatus { found, none, budget_exceeded };

struct ImmersionSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<ImmersionCertificate> certificate;
  long long steps_used = 0;
};

// Exhaustive decision search: enumerates degree-feasible injections and
// backtracks over edge-disjoint routings. The budget counts router steps;
// running out yields budget_exceeded, never a false "none".
ImmersionSearch find_immersion(const Multigraph& g, const Multigraph& h,
                               ImmersionMode mode,
                               long long budget = 200'000'000);

// Strong immersion of h into a parallel star g = gen_parallel_star(l, m)
// with max_degree(h) <= l and |V(h)| <= m. Each h-edge routes through the
// hub on fresh parallel spokes.
ImmersionCertificate immerse_universal_into_S(const Multigraph& h,
                                                 const Multigraph& g);

// Weak immersion of h into a connected g with |V(g)| >= |V(h)| in which
// every adjacent pair carries >= |E(h)| parallel edges. Routes one h-edge at
// a time; a vertex-simple route spends at most one edge per pair, so the
// remaining multiplicities stay positive throughout.
ImmersionCertificate immerse_into_dense(const Multigraph& h,
                                        const Multigraph& g);

// Lift a certificate on consolidate(g, {u, v}) back to g, given >= |E(h)|
// parallel u-v edges. Paths crossing the merged vertex are re-expanded with
// distinct parallel u-v edges; a strong certificate stays strong.
ImmersionCertificate lift_through_consolidation(
    const Multigraph& g, VertexId u, VertexId v, const Multigraph& h,
    const ImmersionCertificate& cert_on_consolidated);

// Lift a strong certificate on contract(g, j) back to g, given that g[j] is
// 2|E(h)|-edge-connected. The merged vertex is re-expanded through a hub
// vertex of j joined to the used boundary edges by edge-disjoint paths.
ImmersionCertificate lift_through_contraction(
    const Multigraph& g, const VertexSet& j, const Multigraph& h,
    const ImmersionCertificate& cert_on_contracted);

// Strong K_k certificate in a graph containing a path x_1..x_n with >= k
// parallel edges per consecutive pair and a hub adjacent to >= k*k path
// vertices. Goes through a parallel-star immersion whose central image is
// the hub.
ImmersionCertificate immerse_from_path_plus_hub(
    const Multigraph& g, const std::vector<VertexId>& path_vertices,
    VertexId hub, int k);

// K_n pattern helper shared by searches and tests.
Multigraph complete_graph(int n);

}  // namespace mgs
