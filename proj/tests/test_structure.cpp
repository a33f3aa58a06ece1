#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "mgs/errors.hpp"
#include "mgs/structure.hpp"
#include "support/oracles.hpp"

using namespace mgs;

namespace {

LinearOrder natural(int n) {
  LinearOrder o;
  o.order.resize(n);
  std::iota(o.order.begin(), o.order.end(), 0);
  return o;
}

// Checks the X-verdict contract: the paths partition V(r) - X, each is an
// induced path component of r - X, and interiors never touch X.
void validate_path_structure(const Multigraph& r, int l,
                             const PathStructure& ps) {
  REQUIRE(!ps.minor.has_value());
  CHECK(static_cast<int>(ps.x_set.size()) < 4 * l);
  CHECK(static_cast<int>(ps.paths.size()) <= 2 * l);
  std::vector<int> owner(r.vertex_count(), -1);
  for (VertexId v : ps.x_set) owner[v] = -2;
  for (std::size_t p = 0; p < ps.paths.size(); ++p) {
    const std::vector<VertexId>& path = ps.paths[p];
    REQUIRE(!path.empty());
    for (VertexId v : path) {
      CHECK(owner[v] == -1);
      owner[v] = static_cast<int>(p);
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      CHECK(r.multiplicity(path[i], path[i + 1]) == 1);
  }
  for (VertexId v = 0; v < r.vertex_count(); ++v) CHECK(owner[v] != -1);
  for (const Edge& e : r.edges()) {
    int a = owner[e.u], b = owner[e.v];
    if (a == -2 || b == -2) continue;  // handled by the interior scan below
    CHECK(a == b);  // no edges between distinct path components
  }
  for (std::size_t p = 0; p < ps.paths.size(); ++p) {
    const std::vector<VertexId>& path = ps.paths[p];
    // No chords: the induced edge count equals the path length.
    int induced = 0;
    std::set<VertexId> on_path(path.begin(), path.end());
    for (const Edge& e : r.edges())
      induced += on_path.count(e.u) && on_path.count(e.v);
    CHECK(induced == static_cast<int>(path.size()) - 1);
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      for (VertexId x : ps.x_set) CHECK(r.multiplicity(path[i], x) == 0);
  }
}

}  // namespace

TEST_CASE("hop width of fixed orders") {
  CHECK(hop_width_of_order(gen_parallel_path(3, 6), natural(6)) == 0);
  CHECK(hop_width_of_order(Multigraph(1, {}), natural(1)) == 0);
  CHECK(hop_width_of_order(Multigraph(2, {{0, 1}}), natural(2)) == 0);
  Multigraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(hop_width_of_order(c4, natural(4)) == 1);
  LinearOrder rev{{3, 2, 1, 0}};
  CHECK(hop_width_of_order(c4, rev) == 1);
  CHECK(cut_width_of_order(gen_parallel_path(3, 6), natural(6)) == 3);
  CHECK(cut_width_of_order(c4, natural(4)) == 2);
  LinearOrder bad{{0, 0, 1, 2}};
  CHECK_THROWS_AS(hop_width_of_order(c4, bad), InvalidInput);
}

TEST_CASE("hop width never exceeds cut width") {
  std::mt19937_64 rng(1313);
  for (const Multigraph& g : oracle::corpus(20, 111, 7, 12, 3)) {
    LinearOrder ord = natural(g.vertex_count());
    std::shuffle(ord.order.begin(), ord.order.end(), rng);
    CHECK(hop_width_of_order(g, ord) <= cut_width_of_order(g, ord));
    LinearOrder rev = ord;
    std::reverse(rev.order.begin(), rev.order.end());
    CHECK(hop_width_of_order(g, rev) == hop_width_of_order(g, ord));
  }
  // natural orders of parallel paths keep every edge at the frontier
  for (int k = 1; k <= 3; ++k)
    for (int n = 3; n <= 6; ++n) {
      Multigraph g = gen_parallel_path(k, n);
      CHECK(hop_width_of_order(g, natural(n)) == 0);
      CHECK(cut_width_of_order(g, natural(n)) == k);
    }
}

TEST_CASE("minimized hop width") {
  HopWidth flat = min_hop_width(gen_parallel_path(3, 7));
  CHECK(flat.value == 0);
  CHECK(flat.exact);
  Multigraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  HopWidth cyc = min_hop_width(c4);
  CHECK(cyc.value == 1);
  CHECK(cyc.exact);
  Multigraph k4g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  HopWidth k4 = min_hop_width(k4g);
  CHECK(k4.value == 2);
  CHECK(k4.exact);
  CHECK(hop_width_of_order(k4g, k4.order) == 2);
}

TEST_CASE("minimized hop width matches the factorial oracle") {
  for (const Multigraph& g : oracle::corpus(25, 222, 8, 14, 3)) {
    HopWidth got = min_hop_width(g);
    REQUIRE(got.exact);
    CHECK(got.value == oracle::hop_width(g));
    CHECK(hop_width_of_order(g, got.order) == got.value);
  }
}

TEST_CASE("parallel graph thresholds") {
  Multigraph p35 = gen_parallel_path(3, 5);
  Multigraph r3 = parallel_graph_R(p35, 3);
  CHECK(r3.vertex_count() == 5);
  CHECK(r3.edge_count() == 4);
  CHECK(parallel_graph_R(p35, 1).edge_count() == 4);
  CHECK(parallel_graph_R(p35, 4).edge_count() == 0);
  CHECK_THROWS_AS(parallel_graph_R(p35, 0), InvalidInput);
}

TEST_CASE("clump conditions fire individually") {
  SUBCASE("isolated singleton is a clump") {
    Multigraph g(1, {});
    Clump c{{0}, {0}, 2};
    CHECK(check_clump(g, parallel_graph_R(g, 2), c).ok);
  }
  SUBCASE("x must be nonempty inside j") {
    Multigraph g(1, {});
    ClumpCheck ck = check_clump(g, parallel_graph_R(g, 2), Clump{{0}, {}, 2});
    CHECK(!ck.ok);
    CHECK(ck.violated == ClumpCondition::x);
  }
  SUBCASE("doubled triangle with two spanning-tree leaves") {
    Multigraph tri(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
    Multigraph r = parallel_graph_R(tri, 2);
    CHECK(r.edge_count() == 3);
    CHECK(check_clump(tri, r, Clump{{0, 1, 2}, {1, 2}, 2}).ok);
  }
  SUBCASE("a: interior not edge-connected enough") {
    Multigraph g(3, {{0, 1}, {1, 2}});
    ClumpCheck ck =
        check_clump(g, parallel_graph_R(g, 2), Clump{{0, 1, 2}, {0, 2}, 2});
    CHECK(!ck.ok);
    CHECK(ck.violated == ClumpCondition::a);
  }
  SUBCASE("b: parallel component straddles the boundary") {
    Multigraph g(3, {{0, 1}, {0, 1}});
    ClumpCheck ck = check_clump(g, parallel_graph_R(g, 2), Clump{{0}, {0}, 2});
    CHECK(!ck.ok);
    CHECK(ck.violated == ClumpCondition::b);
  }
  SUBCASE("c: an x vertex with too few edges inward") {
    Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
    ClumpCheck ck =
        check_clump(g, parallel_graph_R(g, 2), Clump{{0, 1, 2}, {0, 2}, 2});
    CHECK(!ck.ok);
    CHECK(ck.violated == ClumpCondition::c);
  }
  SUBCASE("d: large interior with a single x vertex") {
    Multigraph g(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3},
                     {3, 0}, {3, 0}});
    ClumpCheck ck =
        check_clump(g, parallel_graph_R(g, 2), Clump{{0, 1, 2, 3}, {0}, 2});
    CHECK(!ck.ok);
    CHECK(ck.violated == ClumpCondition::d);
  }
  SUBCASE("e: everything in x but not a singleton") {
    Multigraph g(2, {{0, 1}, {0, 1}});
    ClumpCheck ck =
        check_clump(g, parallel_graph_R(g, 2), Clump{{0, 1}, {0, 1}, 2});
    CHECK(!ck.ok);
    CHECK(ck.violated == ClumpCondition::e);
  }
  SUBCASE("f: too few x vertices for the component count") {
    Multigraph g(6, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {1, 2}, {3, 0},
                     {4, 0}, {4, 2}, {5, 1}, {5, 3}});
    ClumpCheck ck = check_clump(
        g, parallel_graph_R(g, 2),
        Clump{{0, 1, 2, 3, 4, 5}, {4, 5}, 2});
    CHECK(!ck.ok);
    CHECK(ck.violated == ClumpCondition::f);
  }
  SUBCASE("r must match the threshold graph") {
    Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK_THROWS_AS(
        check_clump(g, parallel_graph_R(g, 1), Clump{{0}, {0}, 2}),
        InvalidInput);
  }
}

TEST_CASE("star minor checker") {
  Multigraph star(5, {{4, 0}, {4, 1}, {4, 2}, {4, 3}});
  StarMinor good{{4}, {{0}, {1}, {2}, {3}}};
  CHECK(check_star_minor(star, good, 4));
  CHECK(check_star_minor(star, good, 3));  // extra leaves are allowed
  CHECK(!check_star_minor(star, good, 5));
  StarMinor detached{{4}, {{0}, {1}, {2}}};
  CHECK(!check_star_minor(star, detached, 4));  // too few leaves
  StarMinor overlap{{4, 0}, {{0}, {1}, {2}, {3}}};
  CHECK(!check_star_minor(star, overlap, 4));
  Multigraph path(3, {{0, 1}, {1, 2}});
  StarMinor unattached{{0}, {{2}, {1}}};
  CHECK(!check_star_minor(path, unattached, 2));  // leaf 2 misses the centre
}

TEST_CASE("path structure dichotomy on the named shapes") {
  SUBCASE("star yields the minor") {
    Multigraph star(5, {{4, 0}, {4, 1}, {4, 2}, {4, 3}});
    PathStructure ps = k1l_path_structure(star, 4);
    REQUIRE(ps.minor.has_value());
    CHECK(check_star_minor(star, *ps.minor, 4));
  }
  SUBCASE("path yields the empty x") {
    Multigraph path5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    PathStructure ps = k1l_path_structure(path5, 3);
    REQUIRE(!ps.minor.has_value());
    CHECK(ps.x_set.empty());
    REQUIRE(ps.paths.size() == 1);
    CHECK(ps.paths[0] == std::vector<VertexId>{0, 1, 2, 3, 4});
    validate_path_structure(path5, 3, ps);
  }
  SUBCASE("three long legs split at the branch vertex") {
    Multigraph spider(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6},
                           {0, 7}, {7, 8}, {8, 9}});
    PathStructure ps = k1l_path_structure(spider, 4);
    validate_path_structure(spider, 4, ps);
    PathStructure minor = k1l_path_structure(spider, 3);
    REQUIRE(minor.minor.has_value());
    CHECK(check_star_minor(spider, *minor.minor, 3));
  }
  SUBCASE("cycle needs one cut vertex") {
    Multigraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    PathStructure ps = k1l_path_structure(c5, 3);
    REQUIRE(!ps.minor.has_value());
    CHECK(ps.x_set == VertexSet{0});
    CHECK(ps.paths.size() == 1);
    validate_path_structure(c5, 3, ps);
  }
  SUBCASE("input validation") {
    Multigraph doubled(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(k1l_path_structure(doubled, 3), InvalidInput);
    Multigraph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(k1l_path_structure(split, 3), InvalidInput);
    Multigraph p(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(k1l_path_structure(p, 1), InvalidInput);
  }
}

TEST_CASE("path structure verdicts are certified on a simple corpus") {
  std::mt19937_64 rng(3333);
  int done = 0;
  while (done < 30) {
    int n = 3 + static_cast<int>(rng() % 8);
    int budget = std::min(2 * n, n * (n - 1) / 2);
    Multigraph g = gen_random(rng(), n, budget, 1);
    if (!is_connected(g)) continue;
    ++done;
    for (int l : {3, 4}) {
      PathStructure ps = k1l_path_structure(g, l);
      if (ps.minor)
        CHECK(check_star_minor(g, *ps.minor, l));
      else
        validate_path_structure(g, l, ps);
    }
  }
}

TEST_CASE("preset bounds") {
  StructureBounds b = paper_bounds(2);
  CHECK(b.a_max == 16);
  CHECK(b.z_max == 6LL * 1024);
  CHECK(b.comp_max == 8);
  CHECK(b.hop_max == 128);
  CHECK(paper_bounds(1).a_max == 4);
  CHECK_THROWS_AS(paper_bounds(0), InvalidInput);
  CHECK_THROWS_AS(paper_bounds(66), InvalidInput);

  // At desk scale the presets are generous: a bare parallel path passes
  // with the trivial certificate.
  Multigraph g = gen_parallel_path(3, 6);
  StructureCertificate cert;
  cert.component_orders.push_back(natural(6));
  cert.bounds = paper_bounds(2);
  CHECK(verify_structure_certificate(g, cert).ok);
}

TEST_CASE("certificate verification pinpoints the failing condition") {
  Multigraph g = gen_parallel_path(3, 6);
  StructureCertificate cert;
  cert.component_orders.push_back(natural(6));
  cert.bounds = {0, 0, 1, 0};
  CHECK(verify_structure_certificate(g, cert).ok);

  StructureCertificate hop = cert;
  hop.bounds.hop_max = -1;
  StructureCheck c4 = verify_structure_certificate(g, hop);
  CHECK(!c4.ok);
  CHECK(c4.violated == StructureViolation::cond4);

  StructureCertificate tight_a = cert;
  tight_a.bounds.a_max = -1;
  StructureCheck c1 = verify_structure_certificate(g, tight_a);
  CHECK(!c1.ok);
  CHECK(c1.violated == StructureViolation::cond1_a);

  StructureCertificate tight_z = cert;
  tight_z.bounds.z_max = -1;
  StructureCheck cz = verify_structure_certificate(g, tight_z);
  CHECK(!cz.ok);
  CHECK(cz.violated == StructureViolation::cond1_z);

  StructureCertificate comps = cert;
  comps.bounds.comp_max = 0;
  StructureCheck c2 = verify_structure_certificate(g, comps);
  CHECK(!c2.ok);
  CHECK(c2.violated == StructureViolation::cond2);

  // A vertex attached to the middle of an order trips condition 3.
  Multigraph ga(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  StructureCertificate mid;
  mid.a_set = {4};
  mid.component_orders.push_back(LinearOrder{{0, 1, 2, 3}});
  mid.bounds = {10, 10, 10, 10};
  StructureCheck c3 = verify_structure_certificate(ga, mid);
  CHECK(!c3.ok);
  CHECK(c3.violated == StructureViolation::cond3);

  // Orders that do not match the leftover components are input errors.
  StructureCertificate carrier = cert;
  carrier.component_orders[0].order.pop_back();
  CHECK_THROWS_AS(verify_structure_certificate(g, carrier), InvalidInput);
}

TEST_CASE("certificate search on parallel compositions") {
  SUBCASE("bare parallel path") {
    std::optional<StructureCertificate> sc = search_structure_certificate(
        gen_parallel_path(3, 8), 3, 4, {100, 100, 100, 100});
    REQUIRE(sc.has_value());
    CHECK(sc->a_set.empty());
    CHECK(sc->z_set.empty());
    CHECK(sc->component_orders.size() == 1);
    CHECK(verify_structure_certificate(gen_parallel_path(3, 8), *sc).ok);
  }
  SUBCASE("two paths joined by sparse cross edges") {
    std::vector<std::pair<VertexId, VertexId>> ed;
    for (int i = 0; i + 1 < 5; ++i)
      for (int j = 0; j < 3; ++j) {
        ed.push_back({i, i + 1});
        ed.push_back({5 + i, 5 + i + 1});
      }
    ed.push_back({0, 5});
    ed.push_back({2, 7});
    Multigraph two(10, ed);
    std::optional<StructureCertificate> sc =
        search_structure_certificate(two, 3, 4, {100, 100, 100, 100});
    REQUIRE(sc.has_value());
    CHECK(sc->a_set.empty());
    CHECK(sc->z_set.size() == 2);
    CHECK(sc->component_orders.size() == 2);
    CHECK(verify_structure_certificate(two, *sc).ok);
  }
  SUBCASE("simple graph loses every edge to the threshold") {
    Multigraph simp(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::optional<StructureCertificate> sc =
        search_structure_certificate(simp, 2, 3, {100, 100, 100, 100});
    REQUIRE(sc.has_value());
    CHECK(sc->z_set.size() == 4);
    CHECK(sc->component_orders.size() == 4);
    std::optional<StructureCertificate> none =
        search_structure_certificate(simp, 2, 3, {100, 100, 3, 100});
    CHECK(!none.has_value());
  }
  SUBCASE("random compositions verify end to end") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 12; ++round) {
      // Two parallel paths of multiplicity 2 glued by a few single edges.
      int left = 3 + static_cast<int>(rng() % 3);
      int right = 3 + static_cast<int>(rng() % 3);
      std::vector<std::pair<VertexId, VertexId>> ed;
      for (int i = 0; i + 1 < left; ++i) {
        ed.push_back({i, i + 1});
        ed.push_back({i, i + 1});
      }
      for (int i = 0; i + 1 < right; ++i) {
        ed.push_back({left + i, left + i + 1});
        ed.push_back({left + i, left + i + 1});
      }
      int cross = 1 + static_cast<int>(rng() % 3);
      std::set<std::pair<VertexId, VertexId>> picked;
      while (static_cast<int>(picked.size()) < cross)
        picked.insert({static_cast<int>(rng() % left),
                       left + static_cast<int>(rng() % right)});
      for (const auto& pr : picked) ed.push_back(pr);
      Multigraph g(left + right, ed);
      std::optional<StructureCertificate> sc =
          search_structure_certificate(g, 2, 4, {100, 100, 100, 100});
      REQUIRE(sc.has_value());
      CHECK(verify_structure_certificate(g, *sc).ok);
      CHECK(static_cast<int>(sc->z_set.size()) == cross);
    }
  }
}
