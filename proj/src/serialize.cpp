#include "avdc/serialize.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "avdc/errors.hpp"

namespace avdc {
namespace {

using json = nlohmann::json;

json graph_summary(const Graph& g) {
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"max_degree", g.max_degree()}};
}

json checks_json(const std::vector<CheckEntry>& checks) {
  json out = json::array();
  for (const CheckEntry& c : checks)
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

EdgeId read_pair(const json& item) {
  if (!item.is_array() || item.size() < 2 || !item[0].is_number_integer() ||
      !item[1].is_number_integer())
    throw ParseError("certificate: expected [u, v, ...], got " + item.dump());
  return EdgeId::make(item[0].get<int>(), item[1].get<int>());
}

int read_color(const json& item) {
  if (item.size() != 3 || !item[2].is_number_integer())
    throw ParseError("certificate: expected [u, v, colour], got " + item.dump());
  return item[2].get<int>();
}

}  // namespace

std::string bound_arithmetic(const std::string& rule, int d, int value) {
  const std::string D = std::to_string(d);
  std::string lhs;
  if (rule == "general") lhs = "floor(5(" + D + "+2)/2)";
  else if (rule == "regular") lhs = "floor((5*" + D + "+37)/3)";
  else if (rule == "three-delta") lhs = "3*" + D;
  else if (rule == "subcubic") lhs = "5";
  else if (rule == "composed") lhs = "sum over parts";
  else lhs = rule;
  return lhs + " = " + std::to_string(value);
}

std::string certificate_to_json(const Graph& g, const AvdCertificate& cert) {
  json edges = json::array();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    edges.push_back({g.edge(e).u, g.edge(e).v, cert.coloring[e]});
  json sets = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) sets.push_back(cert.coloring.colors_at(g, v));
  json witnesses = json::array();
  for (const Witness& w : cert.witnesses) witnesses.push_back({w.edge.u, w.edge.v, w.color});
  json doc{{"format", "avdc-certificate"},
           {"graph", graph_summary(g)},
           {"colors_used", cert.colors_used},
           {"bound_claimed", cert.bound_claimed},
           {"bound_rule", cert.bound_rule},
           {"bound_arithmetic", bound_arithmetic(cert.bound_rule, g.max_degree(), cert.bound_claimed)},
           {"edges", edges},
           {"vertex_colors", sets},
           {"witnesses", witnesses}};
  return doc.dump(1) + "\n";
}

CertificateDocument certificate_from_json(const Graph& g, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != "avdc-certificate")
    throw ParseError("certificate: missing format tag \"avdc-certificate\"");
  for (const char* key : {"colors_used", "bound_claimed"})
    if (!doc.contains(key) || !doc[key].is_number_integer())
      throw ParseError(std::string("certificate: missing integer field ") + key);
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("certificate: missing edge list");

  CertificateDocument out;
  AvdCertificate& cert = out.certificate;
  cert.coloring = EdgeColoring::uncolored(g);
  cert.colors_used = doc["colors_used"].get<int>();
  cert.bound_claimed = doc["bound_claimed"].get<int>();
  cert.bound_rule = doc.value("bound_rule", "");
  std::set<EdgeId> seen;
  for (const json& item : doc["edges"]) {
    const EdgeId e = read_pair(item);
    const int c = read_color(item);
    auto idx = g.find_edge(e.u, e.v);
    if (!idx) {
      out.foreign_edges.push_back(e);
      continue;
    }
    if (!seen.insert(e).second) {
      out.repeated_edges.push_back(e);
      continue;
    }
    cert.coloring.set(*idx, c);
  }
  if (doc.contains("witnesses")) {
    if (!doc["witnesses"].is_array()) throw ParseError("certificate: witnesses must be a list");
    for (const json& item : doc["witnesses"]) cert.witnesses.push_back({read_pair(item), read_color(item)});
  }
  return out;
}

std::string partition_to_json(const Graph& g, const std::vector<PartitionSection>& sections) {
  json doc{{"format", "avdc-partition"}, {"graph", graph_summary(g)}};
  for (const PartitionSection& s : sections) {
    json parts = json::array();
    for (const auto& part : s.parts) {
      json edges = json::array();
      for (const EdgeId& e : part) edges.push_back({e.u, e.v});
      parts.push_back(edges);
    }
    doc[s.name] = {{"parts", parts}, {"checks", checks_json(s.checks)}, {"pass", all_pass(s.checks)}};
  }
  return doc.dump(1) + "\n";
}

std::string audit_to_json(const AuditReport& r) {
  json bounds = json::array();
  for (const BoundRow& b : r.bound_table)
    bounds.push_back({{"rule", b.rule}, {"claimed", b.claimed}, {"certified", b.certified}});
  json doc{{"format", "avdc-audit"},
           {"graph",
            {{"n", r.graph.n},
             {"m", r.graph.m},
             {"max_degree", r.graph.max_degree},
             {"min_degree", r.graph.min_degree},
             {"regular", r.graph.regular}}},
           {"checks", checks_json(r.checks)},
           {"bound_table", bounds},
           {"notes", r.notes},
           {"pass", r.pass()}};
  return doc.dump(1) + "\n";
}

std::string checks_to_text(const std::vector<CheckEntry>& checks) {
  std::ostringstream out;
  for (const CheckEntry& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

std::string audit_to_text(const AuditReport& r) {
  std::ostringstream out;
  out << "graph n=" << r.graph.n << " m=" << r.graph.m << " max_degree=" << r.graph.max_degree
      << " min_degree=" << r.graph.min_degree << " regular=" << (r.graph.regular ? "yes" : "no")
      << '\n';
  out << checks_to_text(r.checks);
  for (const BoundRow& b : r.bound_table)
    out << "bound " << b.rule << " claimed=" << b.claimed << " certified=" << b.certified << '\n';
  for (const std::string& note : r.notes) out << "note " << note << '\n';
  out << "overall " << (r.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace avdc
