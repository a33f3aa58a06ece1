// Batch front end: graph generation, immersion/spider/tangle/width analyses,
// certificate emission and re-verification. Exit codes: 0 = verdict-yes or
// success, 1 = verdict-no, 2 = input error, 3 = cap or budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mgs/errors.hpp"
#include "mgs/io.hpp"

namespace {

using namespace mgs;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << text;
}

GraphDocument load_graph(const std::string& path) {
  return parse_graph(read_file(path));
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

// Certificate arguments accept either a bare certificate or a whole report.
Json load_cert(const std::string& path) {
  Json cert = load_json(path);
  if (cert.is_object() && cert.contains("certificate") &&
      cert.contains("verdict"))
    cert = cert.at("certificate");
  return cert;
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (item.empty()) throw InvalidInput("empty entry in list: " + text);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: " + item);
    }
    if (used != item.size()) throw InvalidInput("not an integer: " + item);
    out.push_back(value);
  }
  return out;
}

VertexSet parse_vertex_set(const std::string& text) {
  if (text.empty()) return {};
  std::vector<int> ids = parse_int_list(text, ',');
  return VertexSet(ids.begin(), ids.end());
}

// Branch sets separated by ';', vertices within a set by ','.
std::vector<VertexSet> parse_model(const std::string& text) {
  std::vector<VertexSet> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ';')) out.push_back(parse_vertex_set(part));
  return out;
}

// Per-subcommand report plumbing shared by every analysis command.
struct Emit {
  std::string command;
  std::string out_path;
  bool timing = false;
  std::chrono::steady_clock::time_point started =
      std::chrono::steady_clock::now();

  int finish(Report r, int exit_code) const {
    r.command = command;
    if (timing) {
      std::chrono::duration<double, std::milli> spent =
          std::chrono::steady_clock::now() - started;
      r.timing_ms = spent.count();
    }
    write_output(out_path, emit_report(r));
    return exit_code;
  }
};

std::string joined_command(int argc, char** argv) {
  std::string cmd = "mgstruct";
  for (int i = 1; i < argc; ++i) cmd += std::string(" ") + argv[i];
  return cmd;
}

Tangle tangle_from_cert(const Json& cert) {
  if (!cert.is_object() || cert.value("kind", "") != "tangle")
    throw InvalidInput("expected a tangle certificate");
  Tangle t;
  t.order = cert.at("order").get<int>();
  t.materialized = true;
  t.members = separations_from_json(cert.at("members"));
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multigraph structural analysis"};
  app.require_subcommand(1);
  std::string command_echo = joined_command(argc, argv);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph document");
  gen->require_subcommand(1);
  struct {
    int k = 0, n = 0, l = 0, m = 0, mult = 1, rn = 0, rm = 0;
    std::uint64_t seed = 0;
    std::string name, out;
    bool dot = false;
  } g_args;
  auto add_gen_common = [&](CLI::App* cmd) {
    cmd->add_option("--name", g_args.name, "document name");
    cmd->add_option("--out", g_args.out, "output file (default stdout)");
    cmd->add_flag("--dot", g_args.dot, "emit graph-drawing text instead");
  };
  auto* gen_p = gen->add_subcommand("P", "path with k parallel edges per link");
  gen_p->add_option("k", g_args.k, "parallel edges per link")->required();
  gen_p->add_option("n", g_args.n, "vertices")->required();
  add_gen_common(gen_p);
  auto* gen_s = gen->add_subcommand("S", "star with l parallel spokes");
  gen_s->add_option("l", g_args.l, "parallel edges per spoke")->required();
  gen_s->add_option("m", g_args.m, "leaves")->required();
  add_gen_common(gen_s);
  auto* gen_r = gen->add_subcommand("random", "seeded random multigraph");
  gen_r->add_option("seed", g_args.seed, "rng seed")->required();
  gen_r->add_option("n", g_args.rn, "vertices")->required();
  gen_r->add_option("m", g_args.rm, "edge budget")->required();
  gen_r->add_option("mult", g_args.mult, "max multiplicity")->required();
  add_gen_common(gen_r);

  // immerse
  auto* immerse = app.add_subcommand("immerse", "search for an immersion");
  struct {
    std::string host, pattern, mode = "weak", out;
    long long budget = 200'000'000;
    bool timing = false;
  } im_args;
  immerse->add_option("--host", im_args.host)->required();
  immerse->add_option("--pattern", im_args.pattern)->required();
  immerse->add_option("--mode", im_args.mode)
      ->check(CLI::IsMember({"weak", "strong"}));
  immerse->add_option("--budget", im_args.budget);
  immerse->add_option("--out", im_args.out);
  immerse->add_flag("--timing", im_args.timing);

  // spider
  auto* spider = app.add_subcommand("spider", "find an x-spider of order k");
  struct {
    std::string graph, x, out;
    int k = 1;
    bool certify = false, timing = false;
  } sp_args;
  spider->add_option("--graph", sp_args.graph)->required();
  spider->add_option("--x", sp_args.x)->required();
  spider->add_option("--k", sp_args.k)->required();
  spider->add_flag("--certify", sp_args.certify,
                   "emit an obstruction when no spider exists");
  spider->add_option("--out", sp_args.out);
  spider->add_flag("--timing", sp_args.timing);

  // pack
  auto* pack = app.add_subcommand("pack", "pack edge-disjoint spiders");
  struct {
    std::string graph, x, out;
    int k = 1, t = 1;
    bool timing = false;
  } pk_args;
  pack->add_option("--graph", pk_args.graph)->required();
  pack->add_option("--x", pk_args.x)->required();
  pack->add_option("--k", pk_args.k)->required();
  pack->add_option("--t", pk_args.t)->required();
  pack->add_option("--out", pk_args.out);
  pack->add_flag("--timing", pk_args.timing);

  // tcw
  auto* tcw = app.add_subcommand("tcw", "tree-cut width bounds");
  struct {
    std::string graph, out;
    int exact_cap = 7;
    bool timing = false;
  } tc_args;
  tcw->add_option("--graph", tc_args.graph)->required();
  tcw->add_option("--exact-cap", tc_args.exact_cap);
  tcw->add_option("--out", tc_args.out);
  tcw->add_flag("--timing", tc_args.timing);

  // hopwidth
  auto* hop = app.add_subcommand("hopwidth", "hop-width of a graph or order");
  struct {
    std::string graph, order, out;
    bool timing = false;
  } hw_args;
  hop->add_option("--graph", hw_args.graph)->required();
  hop->add_option("--order", hw_args.order,
                  "evaluate this order instead of minimizing");
  hop->add_option("--out", hw_args.out);
  hop->add_flag("--timing", hw_args.timing);

  // tangle
  auto* tangle = app.add_subcommand("tangle", "tangle operations");
  tangle->require_subcommand(1);
  struct {
    std::string graph, cert, model, z, x, out;
    int k = 1;
    bool timing = false;
  } tg_args;
  auto* tg_check = tangle->add_subcommand("check", "run the tangle axioms");
  tg_check->add_option("--graph", tg_args.graph)->required();
  tg_check->add_option("--cert", tg_args.cert)->required();
  tg_check->add_option("--out", tg_args.out);
  tg_check->add_flag("--timing", tg_args.timing);
  auto* tg_induce =
      tangle->add_subcommand("induce", "tangle induced by a clique minor");
  tg_induce->add_option("--graph", tg_args.graph)->required();
  tg_induce->add_option("--model", tg_args.model, "branch sets, e.g. 0;1;2,3")
      ->required();
  tg_induce->add_option("--k", tg_args.k)->required();
  tg_induce->add_option("--out", tg_args.out);
  tg_induce->add_flag("--timing", tg_args.timing);
  auto* tg_minus = tangle->add_subcommand("minus", "restrict a tangle to g-z");
  tg_minus->add_option("--graph", tg_args.graph)->required();
  tg_minus->add_option("--cert", tg_args.cert)->required();
  tg_minus->add_option("--z", tg_args.z)->required();
  tg_minus->add_option("--out", tg_args.out);
  tg_minus->add_flag("--timing", tg_args.timing);
  auto* tg_free = tangle->add_subcommand("free", "freeness of a vertex set");
  tg_free->add_option("--graph", tg_args.graph)->required();
  tg_free->add_option("--cert", tg_args.cert)->required();
  tg_free->add_option("--x", tg_args.x)->required();
  tg_free->add_option("--out", tg_args.out);
  tg_free->add_flag("--timing", tg_args.timing);

  // structure
  auto* structure = app.add_subcommand("structure", "structure certificates");
  structure->require_subcommand(1);
  struct {
    std::string graph, cert, bounds, out;
    int threshold = 1, l = 3;
    bool timing = false;
  } st_args;
  auto* st_verify =
      structure->add_subcommand("verify", "check a structure certificate");
  st_verify->add_option("--graph", st_args.graph)->required();
  st_verify->add_option("--cert", st_args.cert)->required();
  st_verify->add_option("--out", st_args.out);
  st_verify->add_flag("--timing", st_args.timing);
  auto* st_search =
      structure->add_subcommand("search", "run the certificate pipeline");
  st_search->add_option("--graph", st_args.graph)->required();
  st_search->add_option("--threshold", st_args.threshold,
                        "parallel-edge threshold p")->required();
  st_search->add_option("--l", st_args.l, "star-minor parameter");
  st_search->add_option("--bounds", st_args.bounds,
                        "a_max,z_max,comp_max,hop_max")->required();
  st_search->add_option("--out", st_args.out);
  st_search->add_flag("--timing", st_args.timing);

  // verify
  auto* verify = app.add_subcommand("verify", "re-check any certificate");
  struct {
    std::string graph, cert, out;
    bool timing = false;
  } vf_args;
  verify->add_option("--cert", vf_args.cert)->required();
  verify->add_option("--graph", vf_args.graph)->required();
  verify->add_option("--out", vf_args.out);
  verify->add_flag("--timing", vf_args.timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (gen->parsed()) {
      Multigraph out_graph;
      std::string name = g_args.name;
      if (gen_p->parsed()) {
        out_graph = gen_parallel_path(g_args.k, g_args.n);
        if (name.empty())
          name = "P(" + std::to_string(g_args.k) + "," +
                 std::to_string(g_args.n) + ")";
      } else if (gen_s->parsed()) {
        out_graph = gen_parallel_star(g_args.l, g_args.m);
        if (name.empty())
          name = "S(" + std::to_string(g_args.l) + "," +
                 std::to_string(g_args.m) + ")";
      } else {
        out_graph = gen_random(g_args.seed, g_args.rn, g_args.rm, g_args.mult);
        if (name.empty())
          name = "random(" + std::to_string(g_args.seed) + "," +
                 std::to_string(g_args.rn) + "," + std::to_string(g_args.rm) +
                 "," + std::to_string(g_args.mult) + ")";
      }
      write_output(g_args.out, g_args.dot ? to_dot(out_graph, name)
                                          : emit_graph(out_graph, name));
      return kExitYes;
    }

    if (immerse->parsed()) {
      Emit emit{command_echo, im_args.out, im_args.timing};
      GraphDocument host = load_graph(im_args.host);
      GraphDocument pattern = load_graph(im_args.pattern);
      ImmersionMode mode = im_args.mode == "strong" ? ImmersionMode::strong
                                                    : ImmersionMode::weak;
      ImmersionSearch found =
          find_immersion(host.graph, pattern.graph, mode, im_args.budget);
      Report r;
      r.data = Json{{"steps_used", found.steps_used}};
      if (found.status == SearchStatus::found) {
        r.verdict = "found";
        r.certificate = immersion_to_json(pattern.graph, *found.certificate);
        return emit.finish(std::move(r), kExitYes);
      }
      r.verdict = found.status == SearchStatus::none ? "none"
                                                     : "budget_exceeded";
      return emit.finish(std::move(r), found.status == SearchStatus::none
                                           ? kExitNo
                                           : kExitCap);
    }

    if (spider->parsed()) {
      Emit emit{command_echo, sp_args.out, sp_args.timing};
      GraphDocument doc = load_graph(sp_args.graph);
      VertexSet x = parse_vertex_set(sp_args.x);
      std::optional<Spider> s = find_spider(doc.graph, x, sp_args.k);
      Report r;
      if (s) {
        r.verdict = "found";
        r.certificate = spider_to_json(x, *s);
        return emit.finish(std::move(r), kExitYes);
      }
      r.verdict = "none";
      if (sp_args.certify) {
        SpiderObstruction o = spider_obstruction(doc.graph, x, sp_args.k);
        r.certificate = obstruction_to_json(x, o);
      }
      return emit.finish(std::move(r), kExitNo);
    }

    if (pack->parsed()) {
      Emit emit{command_echo, pk_args.out, pk_args.timing};
      GraphDocument doc = load_graph(pk_args.graph);
      VertexSet x = parse_vertex_set(pk_args.x);
      SpiderPacking p = pack_spiders(doc.graph, x, pk_args.k, pk_args.t);
      Report r;
      r.verdict = p.hitting_set ? "hitting_set" : "packed";
      r.certificate = packing_to_json(x, pk_args.k, pk_args.t, p);
      return emit.finish(std::move(r), p.hitting_set ? kExitNo : kExitYes);
    }

    if (tcw->parsed()) {
      Emit emit{command_echo, tc_args.out, tc_args.timing};
      GraphDocument doc = load_graph(tc_args.graph);
      TcwBounds b = tcw_bounds(doc.graph, tc_args.exact_cap);
      Report r;
      r.verdict = b.exact ? "exact" : "bounds";
      r.data = Json{{"lower", b.lower}, {"upper", b.upper}};
      r.certificate = tree_cut_to_json(b.witness);
      return emit.finish(std::move(r), kExitYes);
    }

    if (hop->parsed()) {
      Emit emit{command_echo, hw_args.out, hw_args.timing};
      GraphDocument doc = load_graph(hw_args.graph);
      Report r;
      if (!hw_args.order.empty()) {
        LinearOrder ord{parse_int_list(hw_args.order, ',')};
        int value = hop_width_of_order(doc.graph, ord);
        r.verdict = "evaluated";
        r.data = Json{{"value", value}};
        r.certificate = hop_order_to_json(ord, value);
        return emit.finish(std::move(r), kExitYes);
      }
      HopWidth h = min_hop_width(doc.graph);
      r.verdict = h.exact ? "exact" : "heuristic";
      r.data = Json{{"value", h.value}};
      r.certificate = hop_order_to_json(h.order, h.value);
      return emit.finish(std::move(r), kExitYes);
    }

    if (tangle->parsed()) {
      Emit emit{command_echo, tg_args.out, tg_args.timing};
      GraphDocument doc = load_graph(tg_args.graph);
      Report r;
      if (tg_check->parsed()) {
        Json cert = load_cert(tg_args.cert);
        Tangle t = tangle_from_cert(cert);
        Multigraph host = cert.contains("host") && !cert.at("host").is_null()
                              ? graph_from_json(cert.at("host"))
                              : doc.graph;
        TangleCheck tc = is_tangle(host, t.members, t.order);
        r.verdict = tc.ok ? "tangle"
                          : "axiom_" + std::to_string(tc.violated_axiom) +
                                "_violated";
        return emit.finish(std::move(r), tc.ok ? kExitYes : kExitNo);
      }
      if (tg_induce->parsed()) {
        MinorModel model;
        model.branch_sets = parse_model(tg_args.model);
        model.target = static_cast<int>(model.branch_sets.size());
        Tangle t = induced_tangle(doc.graph, model, tg_args.k);
        if (!t.materialized) {
          r.verdict = "cap_exceeded";
          return emit.finish(std::move(r), kExitCap);
        }
        r.verdict = "tangle";
        r.certificate = tangle_to_json(t.members, t.order);
        return emit.finish(std::move(r), kExitYes);
      }
      if (tg_minus->parsed()) {
        Tangle t = tangle_from_cert(load_cert(tg_args.cert));
        VertexSet z = parse_vertex_set(tg_args.z);
        TangleMinusResult res = tangle_minus(doc.graph, t, z);
        r.verdict = "tangle";
        r.certificate = tangle_to_json(res.tangle.members, res.tangle.order,
                                       &res.host.graph);
        return emit.finish(std::move(r), kExitYes);
      }
      Tangle t = tangle_from_cert(load_cert(tg_args.cert));
      VertexSet x = parse_vertex_set(tg_args.x);
      FreeResult f = is_free(doc.graph, t, x);
      r.verdict = f.free ? "free" : "held";
      if (f.witness) {
        Json w;
        w["edges"] = std::string();
        w["vertices"] = std::string();
        for (char c : f.witness->edge_side)
          w["edges"] = w["edges"].get<std::string>() + (c == 0 ? "A" : "B");
        for (char c : f.witness->vertex_side)
          w["vertices"] = w["vertices"].get<std::string>() +
                          (c == 1 ? "A" : c == 2 ? "B" : "*");
        r.data = Json{{"witness", w}};
      }
      return emit.finish(std::move(r), f.free ? kExitYes : kExitNo);
    }

    if (structure->parsed()) {
      Emit emit{command_echo, st_args.out, st_args.timing};
      GraphDocument doc = load_graph(st_args.graph);
      Report r;
      if (st_verify->parsed()) {
        Json cert = load_cert(st_args.cert);
        if (cert.value("kind", "") != "structure")
          throw InvalidInput("expected a structure certificate");
        StructureCheck sc =
            verify_structure_certificate(doc.graph, structure_from_json(cert));
        r.verdict = sc.ok ? "accepted" : "rejected";
        if (!sc.ok) {
          const char* names[] = {"none", "cond1_a", "cond1_z", "cond2",
                                 "cond3", "cond4"};
          r.data = Json{{"violation", names[static_cast<int>(sc.violated)]}};
        }
        return emit.finish(std::move(r), sc.ok ? kExitYes : kExitNo);
      }
      std::vector<int> nums = parse_int_list(st_args.bounds, ',');
      if (nums.size() != 4)
        throw InvalidInput("--bounds needs a_max,z_max,comp_max,hop_max");
      StructureBounds bounds{nums[0], nums[1], nums[2], nums[3]};
      std::optional<StructureCertificate> cert = search_structure_certificate(
          doc.graph, st_args.threshold, st_args.l, bounds);
      if (!cert) {
        r.verdict = "none";
        return emit.finish(std::move(r), kExitNo);
      }
      r.verdict = "found";
      r.certificate = structure_to_json(*cert);
      return emit.finish(std::move(r), kExitYes);
    }

    // verify
    {
      Emit emit{command_echo, vf_args.out, vf_args.timing};
      GraphDocument doc = load_graph(vf_args.graph);
      Json cert = load_cert(vf_args.cert);
      VerifyOutcome outcome = verify_certificate(doc.graph, cert);
      Report r;
      r.verdict = outcome.ok ? "accepted" : "rejected";
      if (!outcome.ok) r.data = Json{{"detail", outcome.detail}};
      return emit.finish(std::move(r), outcome.ok ? kExitYes : kExitNo);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
