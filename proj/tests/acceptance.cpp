// Acceptance harness: one timed pass/fail line per criterion. Takes the CLI
// binary path as argv[1] (used by the round-trip battery only). Exits 0 iff
// every criterion passes; time budgets are pinned below next to each entry.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mgs/errors.hpp"
#include "mgs/flows.hpp"
#include "mgs/immersion.hpp"
#include "mgs/io.hpp"
#include "mgs/multigraph.hpp"
#include "mgs/spiders.hpp"
#include "mgs/structure.hpp"
#include "mgs/tangles.hpp"
#include "mgs/treecut.hpp"
#include "support/oracles.hpp"

namespace {

using namespace mgs;

std::string g_cli;  // path to the command-line binary, from argv[1]

bool fail(std::string& detail, const std::string& why) {
  if (detail.empty()) detail = why;
  return false;
}

// ---- 1: generator families ------------------------------------------------

bool crit1(std::string& detail) {
  Multigraph p = gen_parallel_path(3, 4);
  if (p.vertex_count() != 4 || p.edge_count() != 9)
    return fail(detail, "gen_P(3,4) is not 4 vertices / 9 edges");
  if (edge_connectivity(p) != 3)
    return fail(detail, "gen_P(3,4) edge connectivity != 3");
  Multigraph s = gen_parallel_star(3, 3);
  if (s.vertex_count() != 4 || s.edge_count() != 9)
    return fail(detail, "gen_S(3,3) is not 4 vertices / 9 edges");
  return true;
}

// ---- 2: non-immersion matrix ----------------------------------------------

bool crit2(std::string& detail) {
  constexpr double kPerInstance = 60.0;
  struct Instance {
    Multigraph host;
    Multigraph pattern;
    ImmersionMode mode;
    std::string label;
  };
  std::vector<Instance> instances;
  for (int n = 4; n <= 6; ++n)
    instances.push_back({gen_parallel_path(3, n), complete_graph(4),
                         ImmersionMode::weak,
                         "gen_P(3," + std::to_string(n) + ") vs K_4 weak"});
  for (int k = 2; k <= 4; ++k)
    for (int n = 3; n <= 5; ++n)
      instances.push_back({gen_parallel_path(k, n), complete_graph(3),
                           ImmersionMode::strong,
                           "gen_P(" + std::to_string(k) + "," +
                               std::to_string(n) + ") vs K_3 strong"});
  for (const Instance& inst : instances) {
    auto t0 = std::chrono::steady_clock::now();
    ImmersionSearch r = find_immersion(inst.host, inst.pattern, inst.mode);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (r.status != SearchStatus::none)
      return fail(detail, inst.label + " did not report none");
    if (dt.count() > kPerInstance)
      return fail(detail, inst.label + " exceeded 60 s");
  }
  return true;
}

// ---- 3: universal immersion into a parallel star ---------------------------

bool crit3(std::string& detail) {
  Multigraph host = gen_parallel_star(3, 4);
  int tested = 0;
  for (int hv = 1; hv <= 4; ++hv) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 0; i < hv; ++i)
      for (VertexId j = i + 1; j < hv; ++j) pairs.push_back({i, j});
    std::vector<int> mult(pairs.size(), 0);
    for (;;) {
      std::vector<std::pair<VertexId, VertexId>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (int c = 0; c < mult[i]; ++c) edges.push_back(pairs[i]);
      Multigraph h(hv, edges);
      if (h.max_degree() <= 3) {
        ++tested;
        ImmersionCertificate cert = immerse_universal_into_S(h, host);
        if (cert.mode != ImmersionMode::strong)
          return fail(detail, "certificate not in strong mode");
        if (!check_immersion(host, h, cert))
          return fail(detail, "rejected certificate at " +
                                  std::to_string(hv) + " vertices / " +
                                  std::to_string(h.edge_count()) + " edges");
      }
      // Odometer over per-pair multiplicities 0..3; degree cap 3 makes this
      // a superset of every isomorphism class the criterion names.
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == 3) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
  if (tested < 100) return fail(detail, "enumeration produced too few cases");
  return true;
}

// ---- 4: spider duality against the partition oracle ------------------------

bool crit4(std::string& detail) {
  std::vector<Multigraph> corpus = oracle::corpus(300, 20240814, 8, 14, 3);
  long long checked = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Multigraph& g = corpus[gi];
    int n = g.vertex_count();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      VertexSet x;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) x.insert(v);
      int boundary = static_cast<int>(delta(g, x).size());
      int k_max = (2 * boundary) / 3;  // |delta(x)| >= ceil(3k/2)
      if (k_max < 1) continue;
      int best = oracle::min_partition_max_boundary(g, x);
      for (int k = 1; k <= k_max; ++k) {
        std::optional<Spider> s = find_spider(g, x, k);
        if (s.has_value() != (best >= k))
          return fail(detail, "oracle disagreement at graph " +
                                  std::to_string(gi) + ", k=" +
                                  std::to_string(k));
        if (s && !check_spider(g, x, *s))
          return fail(detail, "returned spider fails its checker");
        if (!s) {
          SpiderObstruction ob = spider_obstruction(g, x, k);
          if (!check_obstruction(g, x, ob))
            return fail(detail, "obstruction fails its checker at graph " +
                                    std::to_string(gi));
        }
        ++checked;
      }
    }
  }
  if (checked < 10000) return fail(detail, "too few (x,k) cases exercised");
  return true;
}

// ---- 5: packing-or-hitting-set outputs -------------------------------------

bool crit5(std::string& detail) {
  std::vector<Multigraph> corpus = oracle::corpus(300, 20240814, 8, 14, 3);
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Multigraph& g = corpus[gi];
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      VertexSet x{v};
      for (int k : {2, 3})
        for (int t : {1, 3}) {
          SpiderPacking p = pack_spiders(g, x, k, t);
          EdgeSet used;
          for (const Spider& s : p.spiders) {
            if (s.order != k || !check_spider(g, x, s))
              return fail(detail, "packed spider fails its checker");
            for (const Path& leg : s.legs.paths)
              for (EdgeId e : leg.edges) {
                if (!used.insert(e).second)
                  return fail(detail, "packed spiders share an edge id");
              }
          }
          if (p.hitting_set) {
            if (static_cast<int>(p.spiders.size()) >= t)
              return fail(detail, "hitting set emitted despite full pack");
            Multigraph rest = remove_edges(g, *p.hitting_set).graph;
            if (oracle::min_partition_max_boundary(rest, x) >= k)
              return fail(detail, "hitting set leaves an order-" +
                                      std::to_string(k) + " spider at graph " +
                                      std::to_string(gi));
          } else if (static_cast<int>(p.spiders.size()) != t) {
            return fail(detail, "neither full pack nor hitting set");
          }
        }
    }
  }
  return true;
}

// ---- 6: tree-cut widths of the named families -------------------------------

bool crit6(std::string& detail) {
  for (int t = 3; t <= 8; ++t) {
    std::vector<std::pair<VertexId, VertexId>> edges(t, {0, 1});
    Multigraph g(2, edges);
    TreeCutDecomposition d{Tree{1, {}}, {VertexSet{0, 1}}};
    if (!check_tree_cut(g, d))
      return fail(detail, "single-node decomposition rejected");
    if (width(g, d).value != 2)
      return fail(detail, "2-vertex " + std::to_string(t) +
                              "-parallel width != 2");
  }
  for (int n = 3; n <= 7; ++n) {
    Multigraph g = gen_parallel_path(3, n);
    TcwBounds b = tcw_bounds(g);
    if (!b.exact || b.upper != 3)
      return fail(detail, "tcw_bounds(gen_P(3," + std::to_string(n) +
                              ")) not exactly 3");
    if (!check_tree_cut(g, b.witness) || width(g, b.witness).value != 3)
      return fail(detail, "witness does not measure 3");
  }
  Multigraph g = gen_parallel_path(3, 4);
  TreeCutDecomposition path;
  path.tree.node_count = g.vertex_count();
  for (int i = 0; i + 1 < g.vertex_count(); ++i)
    path.tree.edges.push_back({i, i + 1});
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    path.bags.push_back(VertexSet{v});
  if (adhesion(g, path) != 3)
    return fail(detail, "singleton path adhesion != 3");
  return true;
}

// ---- 7: tree decomposition conversion bounds --------------------------------

bool crit7(std::string& detail) {
  for (int d_max : {3, 4}) {
    std::mt19937_64 rng(7140 + d_max);
    int accepted = 0;
    int attempts = 0;
    while (accepted < 100) {
      if (++attempts > 200000)
        return fail(detail, "generator exhausted at degree cap " +
                                std::to_string(d_max));
      int n = 4 + static_cast<int>(rng() % 7);
      int pool = n * (n - 1) / 2;
      int budget = std::min(n - 1 + static_cast<int>(rng() % n), pool);
      Multigraph g = gen_random(rng(), n, budget, 1);
      if (!is_connected(g) || g.max_degree() > d_max) continue;
      TreeDecompositionResult td = exact_tree_decomposition(g);
      if (td.width > 4) continue;
      TreeCutDecomposition d = convert_tree_decomposition(g, td.decomposition,
                                                          d_max);
      if (!check_tree_cut(g, d))
        return fail(detail, "converted decomposition rejected");
      if (adhesion(g, d) > (2 * td.width + 2) * d_max)
        return fail(detail, "adhesion bound breached");
      int torso_bound = (d_max + 1) * (td.width + 1);
      for (int node = 0; node < d.tree.node_count; ++node)
        if (torso(g, d, node).graph.vertex_count() > torso_bound)
          return fail(detail, "torso bound breached");
      ++accepted;
    }
  }
  return true;
}

// ---- 8: tangle axioms on K_6 ------------------------------------------------

bool crit8(std::string& detail) {
  Multigraph k6 = complete_graph(6);
  MinorModel model;
  for (VertexId v = 0; v < 6; ++v) model.branch_sets.push_back(VertexSet{v});
  model.target = 6;
  Tangle t = induced_tangle(k6, model, 4);
  if (!t.materialized) return fail(detail, "K_6 tangle failed to materialize");
  if (t.order != 4 || !is_tangle(k6, t.members, 4).ok)
    return fail(detail, "induced K_6 orientation is not an order-4 tangle");
  TangleMinusResult tm = tangle_minus(k6, t, VertexSet{0});
  if (tm.tangle.order != 3 ||
      !is_tangle(tm.host.graph, tm.tangle.members, 3).ok)
    return fail(detail, "tangle minus one vertex is not an order-3 tangle");
  for (const Separation& s : t.members) {
    Separation shifted = closure_shift(k6, s);
    if (!tangle_contains(k6, t, shifted))
      return fail(detail, "closure shift left the tangle");
  }
  return true;
}

// ---- 9: hop-width oracle equality --------------------------------------------

bool crit9(std::string& detail) {
  std::vector<Multigraph> corpus = oracle::corpus(100, 814009, 8, 14, 3);
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Multigraph& g = corpus[gi];
    HopWidth hw = min_hop_width(g);
    if (!hw.exact) return fail(detail, "minimizer not exact below its cap");
    if (hw.value != oracle::hop_width(g))
      return fail(detail, "oracle disagreement at graph " +
                              std::to_string(gi));
    if (hop_width_of_order(g, hw.order) != hw.value)
      return fail(detail, "returned order does not realize the value");
  }
  for (int k = 1; k <= 3; ++k)
    for (int n = 3; n <= 7; ++n) {
      Multigraph g = gen_parallel_path(k, n);
      LinearOrder natural;
      for (VertexId v = 0; v < n; ++v) natural.order.push_back(v);
      if (hop_width_of_order(g, natural) != 0)
        return fail(detail, "natural order of gen_P(" + std::to_string(k) +
                                "," + std::to_string(n) + ") has nonzero hop");
      if (cut_width_of_order(g, natural) != k)
        return fail(detail, "cut-width comparator != k");
    }
  return true;
}

// ---- 10: structure certificate pipeline and mutations ------------------------

struct Composition {
  Multigraph g;
  int z_expected = 0;
};

// Center 0 with three doubled legs (leg 0 always 4 long, so its tail keeps
// three vertices) plus two standalone doubled paths; single cross edges join
// the standalone paths and optional single edges run from the center to
// standalone interiors. At threshold 2 those singles are exactly Z.
Composition make_composition(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto doubled = [&edges](VertexId a, VertexId b) {
    edges.push_back({a, b});
    edges.push_back({a, b});
  };
  VertexId next = 1;
  std::vector<std::vector<VertexId>> standalone;
  for (int leg = 0; leg < 3; ++leg) {
    int len = leg == 0 ? 4 : 2 + static_cast<int>(rng() % 3);
    VertexId prev = 0;
    for (int i = 0; i < len; ++i) {
      doubled(prev, next);
      prev = next++;
    }
  }
  for (int p = 0; p < 2; ++p) {
    int len = 3 + static_cast<int>(rng() % 3);
    std::vector<VertexId> vs;
    for (int i = 0; i < len; ++i) vs.push_back(next++);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) doubled(vs[i], vs[i + 1]);
    standalone.push_back(std::move(vs));
  }
  int cross = 1 + static_cast<int>(rng() % 3);
  std::set<std::pair<VertexId, VertexId>> picked;
  while (static_cast<int>(picked.size()) < cross) {
    VertexId u = standalone[0][rng() % standalone[0].size()];
    VertexId v = standalone[1][rng() % standalone[1].size()];
    picked.insert({std::min(u, v), std::max(u, v)});
  }
  for (const auto& e : picked) edges.push_back(e);
  int singles = static_cast<int>(rng() % 3);
  std::set<VertexId> targets;
  while (static_cast<int>(targets.size()) < singles) {
    const std::vector<VertexId>& path = standalone[rng() % 2];
    targets.insert(path[1 + rng() % (path.size() - 2)]);
  }
  for (VertexId v : targets) edges.push_back({0, v});
  return {Multigraph(next, edges), cross + singles};
}

bool crit10(std::string& detail) {
  const StructureBounds bounds{16, 64, 16, 8};
  for (int i = 0; i < 50; ++i) {
    Composition comp = make_composition(9100 + i);
    std::optional<StructureCertificate> cert =
        search_structure_certificate(comp.g, 2, 4, bounds);
    if (!cert) return fail(detail, "search found nothing at instance " +
                                       std::to_string(i));
    if (!verify_structure_certificate(comp.g, *cert).ok)
      return fail(detail, "pipeline output rejected at instance " +
                              std::to_string(i));
    if (static_cast<int>(cert->z_set.size()) != comp.z_expected)
      return fail(detail, "unexpected Z at instance " + std::to_string(i));

    StructureCertificate mutated = *cert;
    StructureViolation expect = StructureViolation::none;
    switch (i % 4) {
      case 0: {
        // Rotate an order so a vertex with an A-neighbor lands inside.
        bool done = false;
        SubgraphResult no_z = remove_edges(comp.g, cert->z_set);
        for (LinearOrder& ord : mutated.component_orders) {
          if (done || ord.order.size() < 3) continue;
          auto touches_a = [&](VertexId v) {
            for (EdgeId e : no_z.graph.incident(v))
              if (cert->a_set.count(no_z.graph.other_end(e, v))) return true;
            return false;
          };
          if (touches_a(ord.order.front())) {
            std::rotate(ord.order.rbegin(), ord.order.rbegin() + 1,
                        ord.order.rend());
            done = true;
          } else if (touches_a(ord.order.back())) {
            std::rotate(ord.order.begin(), ord.order.begin() + 1,
                        ord.order.end());
            done = true;
          }
        }
        if (!done)
          return fail(detail, "no rotatable order at instance " +
                                  std::to_string(i));
        expect = StructureViolation::cond3;
        break;
      }
      case 1:
        mutated.bounds.hop_max = -1;
        expect = StructureViolation::cond4;
        break;
      case 2:
        mutated.bounds.comp_max =
            static_cast<long long>(cert->component_orders.size()) - 1;
        expect = StructureViolation::cond2;
        break;
      default:
        mutated.bounds.z_max =
            static_cast<long long>(cert->z_set.size()) - 1;
        expect = StructureViolation::cond1_z;
        break;
    }
    StructureCheck check = verify_structure_certificate(comp.g, mutated);
    if (check.ok || check.violated != expect)
      return fail(detail, "mutation " + std::to_string(i % 4) +
                              " not rejected with the right first violation"
                              " at instance " + std::to_string(i));
  }
  return true;
}

// ---- 11: path-plus-hub construction ------------------------------------------

bool crit11(std::string& detail) {
  for (int k = 2; k <= 3; ++k) {
    int len = k * k;
    Multigraph base = gen_parallel_path(k, len);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : base.edges()) edges.push_back({e.u, e.v});
    for (VertexId v = 0; v < len; ++v) edges.push_back({v, len});
    Multigraph g(len + 1, edges);
    std::vector<VertexId> path;
    for (VertexId v = 0; v < len; ++v) path.push_back(v);
    ImmersionCertificate cert = immerse_from_path_plus_hub(g, path, len, k);
    if (cert.mode != ImmersionMode::strong)
      return fail(detail, "certificate not in strong mode");
    if (!check_immersion(g, complete_graph(k), cert))
      return fail(detail, "K_" + std::to_string(k) + " certificate rejected");
  }
  return true;
}

// ---- 12: CLI certificate round trips ------------------------------------------

struct CliFixture {
  std::string dir;
  std::string log;

  std::string path(const std::string& name) const { return dir + "/" + name; }

  int run(const std::string& args) const {
    std::string cmd = g_cli + " " + args + " >/dev/null 2>>" + log;
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

bool crit12(std::string& detail) {
  if (g_cli.empty() || !std::filesystem::exists(g_cli))
    return fail(detail, "CLI binary path not provided");
  char tmpl[] = "/tmp/mgs-accept-XXXXXX";
  if (!mkdtemp(tmpl)) return fail(detail, "mkdtemp failed");
  CliFixture f{tmpl, std::string(tmpl) + "/stderr.log"};
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) ok = fail(detail, what);
    return cond;
  };
  auto verdict_of = [&](const std::string& file) -> std::string {
    Json j = Json::parse(slurp(f.path(file)), nullptr, false);
    if (j.is_discarded() || !j.contains("verdict")) return "<unparsable>";
    return j.at("verdict").get<std::string>();
  };
  auto verified = [&](const std::string& cert_file,
                      const std::string& graph_file) {
    return f.run("verify --cert " + f.path(cert_file) + " --graph " +
                 f.path(graph_file)) == 0;
  };

  // Generators: documents match the library output byte for byte.
  expect(f.run("gen P 3 4 --out " + f.path("p34.mg")) == 0, "gen P failed");
  expect(slurp(f.path("p34.mg")) == emit_graph(gen_parallel_path(3, 4),
                                               "P(3,4)"),
         "gen P output differs from the library emitter");
  expect(f.run("gen S 3 3 --out " + f.path("s33.mg")) == 0, "gen S failed");
  expect(f.run("gen P 3 6 --out " + f.path("p36.mg")) == 0, "gen P 3 6");
  expect(f.run("gen P 4 2 --out " + f.path("d4.mg")) == 0, "gen P 4 2");
  expect(f.run("gen random 42 6 10 2 --out " + f.path("r1.mg")) == 0,
         "gen random failed");
  expect(f.run("gen random 42 6 10 2 --out " + f.path("r2.mg")) == 0,
         "gen random rerun failed");
  expect(slurp(f.path("r1.mg")) == slurp(f.path("r2.mg")),
         "identical seeds gave different documents");
  expect(slurp(f.path("r1.mg")) == emit_graph(gen_random(42, 6, 10, 2),
                                              "random(42,6,10,2)"),
         "gen random output differs from the library generator");
  expect(f.run("gen P 2 2 --dot --out " + f.path("p22.dot")) == 0,
         "gen --dot failed");
  expect(slurp(f.path("p22.dot")).find("--") != std::string::npos,
         "dot export lacks edges");

  spit(f.path("k3.mg"), emit_graph(complete_graph(3), "K3"));
  spit(f.path("k4.mg"), emit_graph(complete_graph(4), "K4"));
  spit(f.path("k6.mg"), emit_graph(complete_graph(6), "K6"));
  spit(f.path("comp.mg"), emit_graph(make_composition(9100).g, "comp"));

  // Immersion: found, none, budget exceeded.
  expect(f.run("immerse --host " + f.path("s33.mg") + " --pattern " +
               f.path("k3.mg") + " --mode strong --out " +
               f.path("imm.json")) == 0,
         "immerse found case exit code");
  expect(verdict_of("imm.json") == "found", "immerse verdict not found");
  expect(verified("imm.json", "s33.mg"), "immersion report not re-accepted");
  expect(f.run("immerse --host " + f.path("p34.mg") + " --pattern " +
               f.path("k3.mg") + " --mode strong --out " +
               f.path("immno.json")) == 1,
         "immerse none case exit code");
  expect(verdict_of("immno.json") == "none", "immerse verdict not none");
  expect(f.run("immerse --host " + f.path("p36.mg") + " --pattern " +
               f.path("k4.mg") + " --budget 3 --out " +
               f.path("immbud.json")) == 3,
         "immerse budget case exit code");

  // Spiders and packing.
  expect(f.run("spider --graph " + f.path("p34.mg") +
               " --x 0 --k 3 --out " + f.path("sp.json")) == 0,
         "spider found case exit code");
  expect(verified("sp.json", "p34.mg"), "spider report not re-accepted");
  expect(f.run("spider --graph " + f.path("p34.mg") +
               " --x 0 --k 4 --certify --out " + f.path("ob.json")) == 1,
         "spider none case exit code");
  expect(verified("ob.json", "p34.mg"), "obstruction not re-accepted");
  expect(f.run("pack --graph " + f.path("s33.mg") +
               " --x 3 --k 3 --t 3 --out " + f.path("pk.json")) == 0,
         "pack full case exit code");
  expect(verdict_of("pk.json") == "packed", "pack verdict not packed");
  expect(verified("pk.json", "s33.mg"), "packing not re-accepted");
  expect(f.run("pack --graph " + f.path("p34.mg") +
               " --x 0 --k 3 --t 2 --out " + f.path("pk2.json")) == 1,
         "pack hitting-set case exit code");
  expect(verified("pk2.json", "p34.mg"), "hitting-set pack not re-accepted");

  // Tree-cut width on the 4-parallel 2-vertex graph.
  expect(f.run("tcw --graph " + f.path("d4.mg") + " --out " +
               f.path("tc.json")) == 0,
         "tcw exit code");
  {
    Json j = Json::parse(slurp(f.path("tc.json")), nullptr, false);
    expect(!j.is_discarded() && j.at("verdict") == "exact" &&
               j.at("data").at("lower") == 2 && j.at("data").at("upper") == 2,
           "tcw on the 4-parallel pair is not exactly (2,2)");
  }
  expect(verified("tc.json", "d4.mg"), "tree-cut witness not re-accepted");

  // Hop width, minimized and evaluated.
  expect(f.run("hopwidth --graph " + f.path("p36.mg") + " --out " +
               f.path("hw.json")) == 0,
         "hopwidth exit code");
  {
    Json j = Json::parse(slurp(f.path("hw.json")), nullptr, false);
    expect(!j.is_discarded() && j.at("data").at("value") == 0,
           "hopwidth of gen_P(3,6) is not 0");
  }
  expect(verified("hw.json", "p36.mg"), "hop order not re-accepted");
  expect(f.run("hopwidth --graph " + f.path("p36.mg") +
               " --order 0,1,2,3,4,5 --out " + f.path("hw2.json")) == 0,
         "hopwidth --order exit code");
  expect(verdict_of("hw2.json") == "evaluated", "explicit order verdict");
  expect(verified("hw2.json", "p36.mg"), "evaluated order not re-accepted");

  // Tangles: induce, check, minus, free.
  expect(f.run("tangle induce --graph " + f.path("k6.mg") +
               " --model \"0;1;2;3;4;5\" --k 4 --out " +
               f.path("tg.json")) == 0,
         "tangle induce exit code");
  expect(f.run("tangle check --graph " + f.path("k6.mg") + " --cert " +
               f.path("tg.json")) == 0,
         "tangle check exit code");
  expect(verified("tg.json", "k6.mg"), "tangle not re-accepted");
  expect(f.run("tangle minus --graph " + f.path("k6.mg") + " --cert " +
               f.path("tg.json") + " --z 0 --out " + f.path("tm.json")) == 0,
         "tangle minus exit code");
  expect(verified("tm.json", "k6.mg"), "shifted tangle not re-accepted");
  expect(f.run("tangle free --graph " + f.path("k6.mg") + " --cert " +
               f.path("tg.json") + " --x 0,1,2") == 0,
         "tangle free exit code");

  // Structure search and verify.
  expect(f.run("structure search --graph " + f.path("comp.mg") +
               " --threshold 2 --l 4 --bounds 16,64,16,8 --out " +
               f.path("st.json")) == 0,
         "structure search exit code");
  expect(f.run("structure verify --graph " + f.path("comp.mg") + " --cert " +
               f.path("st.json")) == 0,
         "structure verify exit code");
  expect(verified("st.json", "comp.mg"), "structure cert not re-accepted");

  // Byte determinism of reports: identical command, identical bytes.
  std::string first = slurp(f.path("imm.json"));
  expect(f.run("immerse --host " + f.path("s33.mg") + " --pattern " +
               f.path("k3.mg") + " --mode strong --out " +
               f.path("imm.json")) == 0,
         "immerse rerun exit code");
  expect(first == slurp(f.path("imm.json")),
         "identical immerse runs differ byte-wise");
  first = slurp(f.path("tc.json"));
  expect(f.run("tcw --graph " + f.path("d4.mg") + " --out " +
               f.path("tc.json")) == 0,
         "tcw rerun exit code");
  expect(first == slurp(f.path("tc.json")),
         "identical tcw runs differ byte-wise");

  // Exit-code contract: input errors 2, caps 3, verdict-no 1 covered above.
  expect(f.run("spider --graph " + f.path("missing.mg") + " --x 0 --k 3") ==
             2,
         "missing file should exit 2");
  expect(f.run("definitely-not-a-command") == 2,
         "unknown subcommand should exit 2");
  spit(f.path("bad.mg"), "mg 1\n\nvertices 2\nedges 1\n0 0\n");
  expect(f.run("tcw --graph " + f.path("bad.mg")) == 2,
         "loop document should exit 2");

  std::error_code ec;
  std::filesystem::remove_all(f.dir, ec);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  struct Row {
    int id;
    const char* name;
    double budget_s;
    bool (*fn)(std::string&);
  };
  const Row rows[] = {
      {1, "generator families and edge connectivity", 1.0, crit1},
      {2, "non-immersion search matrix (60 s per instance)", 720.0, crit2},
      {3, "universal immersion of all small patterns", 10.0, crit3},
      {4, "spider duality on 300 seeded multigraphs", 300.0, crit4},
      {5, "spider packing or hitting set on the corpus", 300.0, crit5},
      {6, "tree-cut widths of the named families", 120.0, crit6},
      {7, "tree decomposition conversion bounds", 120.0, crit7},
      {8, "tangle axioms on K_6", 60.0, crit8},
      {9, "hop-width oracle equality and path orders", 180.0, crit9},
      {10, "structure certificates and mutations", 120.0, crit10},
      {11, "path-plus-hub immersion construction", 30.0, crit11},
      {12, "CLI certificate round trips", 300.0, crit12},
  };
  int passed = 0;
  for (const Row& row : rows) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = row.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (ok && dt.count() > row.budget_s) {
      ok = false;
      detail = "time budget exceeded";
    }
    char line[512];
    std::snprintf(line, sizeof line, "[%s] criterion %d: %s (%.2f s)%s%s",
                  ok ? "PASS" : "FAIL", row.id, row.name, dt.count(),
                  detail.empty() ? "" : " — ", detail.c_str());
    std::cout << line << std::endl;
    if (ok) ++passed;
  }
  std::cout << "acceptance: " << passed << "/12 criteria passed" << std::endl;
  return passed == 12 ? 0 : 1;
}
