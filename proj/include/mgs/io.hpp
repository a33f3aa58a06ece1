#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mgs/immersion.hpp"
#include "mgs/multigraph.hpp"
#include "mgs/spiders.hpp"
#include "mgs/structure.hpp"
#include "mgs/tangles.hpp"
#include "mgs/treecut.hpp"

namespace mgs {

using Json = nlohmann::ordered_json;

// Plain-text graph document:
//   mg 1
//   name <rest of line>      (optional)
//   vertices <n>
//   edges <m>
//   <u> <v>                  (m lines; edge id = line index)
struct GraphDocument {
  Multigraph graph;
  std::string name;  // empty when the document is unnamed
};

// Errors carry 1-based line and column of the offending token.
GraphDocument parse_graph(const std::string& text);

// Canonical form: edges sorted by (min endpoint, max endpoint, input index).
std::string emit_graph(const Multigraph& g, const std::string& name = "");

// Graph-drawing export; parallel edges appear as repeated entries.
std::string to_dot(const Multigraph& g, const std::string& name = "");

Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

// Certificate payloads, tagged by "kind". Each embeds the context needed to
// re-check it against a host graph alone.
Json immersion_to_json(const Multigraph& pattern,
                       const ImmersionCertificate& cert);
Json spider_to_json(const VertexSet& x, const Spider& s);
Json obstruction_to_json(const VertexSet& x, const SpiderObstruction& o);
Json packing_to_json(const VertexSet& x, int k, int t, const SpiderPacking& p);
Json tree_cut_to_json(const TreeCutDecomposition& d);
Json tangle_to_json(const std::vector<Separation>& members, int order,
                    const Multigraph* host = nullptr);
Json structure_to_json(const StructureCertificate& cert);
Json hop_order_to_json(const LinearOrder& ord, int value);

std::vector<Separation> separations_from_json(const Json& members);
StructureCertificate structure_from_json(const Json& j);

struct VerifyOutcome {
  bool ok = false;
  std::string detail;  // which check failed, for the report
};

// Dispatch on cert["kind"] and re-run the matching check against g.
// Unknown kinds and malformed payloads raise InvalidInput.
VerifyOutcome verify_certificate(const Multigraph& g, const Json& cert);

struct Report {
  std::string command;
  std::string verdict;
  Json certificate;  // null when the command yields no certificate
  Json data;         // command-specific numbers; omitted when null
  std::optional<std::uint64_t> seed;
  std::optional<double> timing_ms;
};

std::string emit_report(const Report& r);

}  // namespace mgs
