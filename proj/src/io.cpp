#include "mgs/io.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mgs/errors.hpp"

namespace mgs {

namespace {

struct Token {
  std::string text;
  int line = 0;    // 1-based
  int column = 0;  // 1-based
};

[[noreturn]] void doc_error(int line, int column, const std::string& what) {
  throw InvalidInput("graph document line " + std::to_string(line) +
                     " column " + std::to_string(column) + ": " + what);
}

// One vector of tokens per nonblank line.
std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    std::vector<Token> toks;
    std::size_t i = pos;
    while (i < end) {
      if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < end && text[j] != ' ' && text[j] != '\t' && text[j] != '\r')
        ++j;
      toks.push_back(Token{text.substr(i, j - i), line_no,
                           static_cast<int>(i - pos) + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int parse_count(const Token& t, const char* what) {
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(t.text, &used);
  } catch (const std::exception&) {
    doc_error(t.line, t.column, std::string("expected ") + what);
  }
  if (used != t.text.size() || value < 0)
    doc_error(t.line, t.column, std::string("expected ") + what);
  return value;
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
  std::vector<std::vector<Token>> lines = tokenize_lines(text);
  std::size_t row = 0;
  auto need_line = [&](const char* what) -> const std::vector<Token>& {
    if (row >= lines.size())
      doc_error(lines.empty() ? 1 : lines.back()[0].line + 1, 1,
                std::string("missing ") + what);
    return lines[row];
  };
  {
    const std::vector<Token>& l = need_line("header 'mg 1'");
    if (l.size() != 2 || l[0].text != "mg" || l[1].text != "1")
      doc_error(l[0].line, l[0].column, "expected header 'mg 1'");
    ++row;
  }
  GraphDocument doc;
  if (row < lines.size() && lines[row][0].text == "name") {
    const std::vector<Token>& l = lines[row];
    for (std::size_t i = 1; i < l.size(); ++i) {
      if (i > 1) doc.name += ' ';
      doc.name += l[i].text;
    }
    ++row;
  }
  int n = 0;
  {
    const std::vector<Token>& l = need_line("'vertices <n>' line");
    if (l.size() != 2 || l[0].text != "vertices")
      doc_error(l[0].line, l[0].column, "expected 'vertices <n>'");
    n = parse_count(l[1], "a vertex count");
    ++row;
  }
  int m = 0;
  {
    const std::vector<Token>& l = need_line("'edges <m>' line");
    if (l.size() != 2 || l[0].text != "edges")
      doc_error(l[0].line, l[0].column, "expected 'edges <m>'");
    m = parse_count(l[1], "an edge count");
    ++row;
  }
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (int e = 0; e < m; ++e) {
    const std::vector<Token>& l = need_line("edge line");
    if (l.size() != 2)
      doc_error(l[0].line, l[0].column, "expected '<u> <v>'");
    int u = parse_count(l[0], "a vertex id");
    int v = parse_count(l[1], "a vertex id");
    if (u >= n) doc_error(l[0].line, l[0].column, "vertex id out of range");
    if (v >= n) doc_error(l[1].line, l[1].column, "vertex id out of range");
    if (u == v)
      doc_error(l[1].line, l[1].column,
                "loop edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") is not allowed");
    endpoints.push_back({u, v});
    ++row;
  }
  if (row < lines.size())
    doc_error(lines[row][0].line, lines[row][0].column,
              "unexpected trailing content");
  doc.graph = Multigraph(n, endpoints);
  return doc;
}

std::string emit_graph(const Multigraph& g, const std::string& name) {
  std::vector<std::pair<std::pair<VertexId, VertexId>, EdgeId>> order;
  for (const Edge& e : g.edges())
    order.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, e.id});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) {
                     return a.first < b.first;
                   });
  std::ostringstream out;
  out << "mg 1\n";
  if (!name.empty()) out << "name " << name << "\n";
  out << "vertices " << g.vertex_count() << "\n";
  out << "edges " << g.edge_count() << "\n";
  for (const auto& [pair, id] : order)
    out << pair.first << " " << pair.second << "\n";
  return out.str();
}

std::string to_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << (name.empty() ? "g" : name) << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges())
    out << "  " << std::min(e.u, e.v) << " -- " << std::max(e.u, e.v)
        << ";\n";
  out << "}\n";
  return out.str();
}

Json graph_to_json(const Multigraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  return j;
}

Multigraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InvalidInput("graph json: need 'vertices' and 'edges'");
  int n = j.at("vertices").get<int>();
  std::vector<std::pair<VertexId, VertexId>> endpoints;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidInput("graph json: edge entries are pairs");
    endpoints.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  return Multigraph(n, endpoints);
}

namespace {

Json path_to_json(const Path& p) {
  Json j;
  j["start"] = p.start;
  j["edges"] = p.edges;
  return j;
}

Path path_from_json(const Json& j) {
  Path p;
  p.start = j.at("start").get<VertexId>();
  p.edges = j.at("edges").get<std::vector<EdgeId>>();
  return p;
}

Json vertex_set_to_json(const VertexSet& x) {
  return Json(std::vector<VertexId>(x.begin(), x.end()));
}

VertexSet vertex_set_from_json(const Json& j) {
  std::vector<VertexId> v = j.get<std::vector<VertexId>>();
  return VertexSet(v.begin(), v.end());
}

Json spider_body_to_json(const Spider& s) {
  Json j;
  j["body"] = s.body;
  j["order"] = s.order;
  Json legs = Json::array();
  for (const Path& leg : s.legs.paths) legs.push_back(path_to_json(leg));
  j["legs"] = std::move(legs);
  return j;
}

Spider spider_body_from_json(const Json& j) {
  Spider s;
  s.body = j.at("body").get<VertexId>();
  s.order = j.at("order").get<int>();
  for (const Json& leg : j.at("legs"))
    s.legs.paths.push_back(path_from_json(leg));
  return s;
}

}  // namespace

Json immersion_to_json(const Multigraph& pattern,
                       const ImmersionCertificate& cert) {
  Json j;
  j["kind"] = "immersion";
  j["mode"] = cert.mode == ImmersionMode::strong ? "strong" : "weak";
  j["pattern"] = graph_to_json(pattern);
  j["branch"] = cert.branch;
  Json comp = Json::array();
  for (const Path& p : cert.composite) comp.push_back(path_to_json(p));
  j["composite"] = std::move(comp);
  return j;
}

Json spider_to_json(const VertexSet& x, const Spider& s) {
  Json j;
  j["kind"] = "spider";
  j["x"] = vertex_set_to_json(x);
  Json body = spider_body_to_json(s);
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

Json obstruction_to_json(const VertexSet& x, const SpiderObstruction& o) {
  Json j;
  j["kind"] = "spider_obstruction";
  j["x"] = vertex_set_to_json(x);
  j["k"] = o.k;
  Json parts = Json::array();
  for (const VertexSet& part : o.parts) parts.push_back(vertex_set_to_json(part));
  j["parts"] = std::move(parts);
  return j;
}

Json packing_to_json(const VertexSet& x, int k, int t,
                     const SpiderPacking& p) {
  Json j;
  j["kind"] = "spider_packing";
  j["x"] = vertex_set_to_json(x);
  j["k"] = k;
  j["t"] = t;
  Json spiders = Json::array();
  for (const Spider& s : p.spiders) spiders.push_back(spider_body_to_json(s));
  j["spiders"] = std::move(spiders);
  if (p.hitting_set)
    j["hitting_set"] =
        Json(std::vector<EdgeId>(p.hitting_set->begin(), p.hitting_set->end()));
  else
    j["hitting_set"] = nullptr;
  return j;
}

Json tree_cut_to_json(const TreeCutDecomposition& d) {
  Json j;
  j["kind"] = "tree_cut";
  Json tree;
  tree["nodes"] = d.tree.node_count;
  Json tedges = Json::array();
  for (const auto& [a, b] : d.tree.edges) tedges.push_back(Json::array({a, b}));
  tree["edges"] = std::move(tedges);
  j["tree"] = std::move(tree);
  Json bags = Json::array();
  for (const VertexSet& bag : d.bags) bags.push_back(vertex_set_to_json(bag));
  j["bags"] = std::move(bags);
  return j;
}

namespace {

std::string side_string(const std::vector<char>& side, bool vertex) {
  std::string out;
  for (char c : side) {
    if (vertex)
      out += c == 1 ? 'A' : c == 2 ? 'B' : '*';
    else
      out += c == 0 ? 'A' : 'B';
  }
  return out;
}

Separation separation_from_json(const Json& j) {
  Separation s;
  std::string edges = j.at("edges").get<std::string>();
  std::string vertices = j.at("vertices").get<std::string>();
  for (char c : edges) {
    if (c != 'A' && c != 'B')
      throw InvalidInput("separation json: edge side chars are A or B");
    s.edge_side.push_back(c == 'A' ? 0 : 1);
  }
  for (char c : vertices) {
    if (c != 'A' && c != 'B' && c != '*')
      throw InvalidInput("separation json: vertex side chars are A, B or *");
    s.vertex_side.push_back(c == 'A' ? 1 : c == 'B' ? 2 : 3);
  }
  return s;
}

}  // namespace

Json tangle_to_json(const std::vector<Separation>& members, int order,
                    const Multigraph* host) {
  Json j;
  j["kind"] = "tangle";
  j["order"] = order;
  if (host) j["host"] = graph_to_json(*host);
  Json ms = Json::array();
  for (const Separation& s : members) {
    Json m;
    m["edges"] = side_string(s.edge_side, false);
    m["vertices"] = side_string(s.vertex_side, true);
    ms.push_back(std::move(m));
  }
  j["members"] = std::move(ms);
  return j;
}

std::vector<Separation> separations_from_json(const Json& members) {
  std::vector<Separation> out;
  for (const Json& m : members) out.push_back(separation_from_json(m));
  return out;
}

Json structure_to_json(const StructureCertificate& cert) {
  Json j;
  j["kind"] = "structure";
  j["a_set"] = vertex_set_to_json(cert.a_set);
  j["z_set"] =
      Json(std::vector<EdgeId>(cert.z_set.begin(), cert.z_set.end()));
  Json orders = Json::array();
  for (const LinearOrder& ord : cert.component_orders)
    orders.push_back(ord.order);
  j["component_orders"] = std::move(orders);
  Json b;
  b["a_max"] = cert.bounds.a_max;
  b["z_max"] = cert.bounds.z_max;
  b["comp_max"] = cert.bounds.comp_max;
  b["hop_max"] = cert.bounds.hop_max;
  j["bounds"] = std::move(b);
  return j;
}

StructureCertificate structure_from_json(const Json& j) {
  StructureCertificate cert;
  cert.a_set = vertex_set_from_json(j.at("a_set"));
  std::vector<EdgeId> z = j.at("z_set").get<std::vector<EdgeId>>();
  cert.z_set = EdgeSet(z.begin(), z.end());
  for (const Json& ord : j.at("component_orders"))
    cert.component_orders.push_back(
        LinearOrder{ord.get<std::vector<VertexId>>()});
  const Json& b = j.at("bounds");
  cert.bounds.a_max = b.at("a_max").get<long long>();
  cert.bounds.z_max = b.at("z_max").get<long long>();
  cert.bounds.comp_max = b.at("comp_max").get<long long>();
  cert.bounds.hop_max = b.at("hop_max").get<long long>();
  return cert;
}

Json hop_order_to_json(const LinearOrder& ord, int value) {
  Json j;
  j["kind"] = "hop_order";
  j["order"] = ord.order;
  j["value"] = value;
  return j;
}

VerifyOutcome verify_certificate(const Multigraph& g, const Json& cert) {
  if (!cert.is_object() || !cert.contains("kind"))
    throw InvalidInput("certificate json: missing 'kind'");
  std::string kind = cert.at("kind").get<std::string>();
  if (kind == "immersion") {
    Multigraph pattern = graph_from_json(cert.at("pattern"));
    ImmersionCertificate c;
    c.mode = cert.at("mode").get<std::string>() == "strong"
                 ? ImmersionMode::strong
                 : ImmersionMode::weak;
    c.branch = cert.at("branch").get<std::vector<VertexId>>();
    for (const Json& p : cert.at("composite"))
      c.composite.push_back(path_from_json(p));
    bool ok = check_immersion(g, pattern, c);
    return VerifyOutcome{ok, ok ? "" : "immersion conditions violated"};
  }
  if (kind == "spider") {
    VertexSet x = vertex_set_from_json(cert.at("x"));
    Spider s = spider_body_from_json(cert);
    bool ok = check_spider(g, x, s);
    return VerifyOutcome{ok, ok ? "" : "spider conditions violated"};
  }
  if (kind == "spider_obstruction") {
    VertexSet x = vertex_set_from_json(cert.at("x"));
    SpiderObstruction o;
    o.k = cert.at("k").get<int>();
    for (const Json& part : cert.at("parts"))
      o.parts.push_back(vertex_set_from_json(part));
    bool ok = check_obstruction(g, x, o);
    return VerifyOutcome{ok, ok ? "" : "obstruction conditions violated"};
  }
  if (kind == "spider_packing") {
    VertexSet x = vertex_set_from_json(cert.at("x"));
    int k = cert.at("k").get<int>();
    int t = cert.at("t").get<int>();
    std::vector<Spider> spiders;
    for (const Json& s : cert.at("spiders"))
      spiders.push_back(spider_body_from_json(s));
    EdgeSet used;
    for (const Spider& s : spiders) {
      if (!check_spider(g, x, s))
        return VerifyOutcome{false, "packed spider invalid"};
      for (const Path& leg : s.legs.paths)
        for (EdgeId e : leg.edges)
          if (!used.insert(e).second)
            return VerifyOutcome{false, "packed spiders share an edge"};
    }
    if (cert.at("hitting_set").is_null()) {
      if (static_cast<int>(spiders.size()) != t)
        return VerifyOutcome{false, "packing lists fewer than t spiders"};
      return VerifyOutcome{true, ""};
    }
    std::vector<EdgeId> hs =
        cert.at("hitting_set").get<std::vector<EdgeId>>();
    EdgeSet hitting(hs.begin(), hs.end());
    if (find_spider(g, x, k, &hitting))
      return VerifyOutcome{false, "hitting set misses a spider"};
    return VerifyOutcome{true, ""};
  }
  if (kind == "tree_cut") {
    TreeCutDecomposition d;
    const Json& tree = cert.at("tree");
    d.tree.node_count = tree.at("nodes").get<int>();
    for (const Json& e : tree.at("edges"))
      d.tree.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    for (const Json& bag : cert.at("bags"))
      d.bags.push_back(vertex_set_from_json(bag));
    bool ok = check_tree_cut(g, d);
    return VerifyOutcome{ok, ok ? "" : "not a tree-cut decomposition"};
  }
  if (kind == "tangle") {
    int order = cert.at("order").get<int>();
    std::vector<Separation> members = separations_from_json(cert.at("members"));
    Multigraph host = cert.contains("host") && !cert.at("host").is_null()
                          ? graph_from_json(cert.at("host"))
                          : g;
    TangleCheck tc = is_tangle(host, members, order);
    return VerifyOutcome{tc.ok, tc.ok ? ""
                                      : "tangle axiom " +
                                            std::to_string(tc.violated_axiom) +
                                            " violated"};
  }
  if (kind == "structure") {
    StructureCheck sc = verify_structure_certificate(g, structure_from_json(cert));
    return VerifyOutcome{sc.ok, sc.ok ? "" : "structure condition violated"};
  }
  if (kind == "hop_order") {
    LinearOrder ord{cert.at("order").get<std::vector<VertexId>>()};
    int value = cert.at("value").get<int>();
    bool ok = hop_width_of_order(g, ord) == value;
    return VerifyOutcome{ok, ok ? "" : "order does not have the stated"
                                       " hop-width"};
  }
  throw InvalidInput("certificate json: unknown kind '" + kind + "'");
}

std::string emit_report(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["verdict"] = r.verdict;
  j["certificate"] = r.certificate.is_null() ? Json() : r.certificate;
  if (!r.data.is_null()) j["data"] = r.data;
  if (r.seed) j["seed"] = *r.seed;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace mgs
