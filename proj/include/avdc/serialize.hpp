#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "avdc/avd.hpp"
#include "avdc/edge_partition.hpp"
#include "avdc/verify.hpp"

namespace avdc {

// Certificate document:
//   {"format": "avdc-certificate", "graph": {n, m, max_degree},
//    "colors_used", "bound_claimed", "bound_rule", "bound_arithmetic",
//    "edges": [[u, v, colour], ...], "vertex_colors": [[...], ...],
//    "witnesses": [[u, v, colour], ...]}
std::string certificate_to_json(const Graph& g, const AvdCertificate& cert);

struct CertificateDocument {
  AvdCertificate certificate;        // edges missing from the file stay uncoloured
  std::vector<EdgeId> foreign_edges; // listed but not edges of the graph
  std::vector<EdgeId> repeated_edges;
};

// Throws ParseError on malformed JSON or a wrong format tag.
CertificateDocument certificate_from_json(const Graph& g, std::string_view text);

// Human-readable bound arithmetic, e.g. "floor(5(6+2)/2) = 20".
std::string bound_arithmetic(const std::string& rule, int max_degree, int value);

struct PartitionSection {
  std::string name;  // "p1", "p2" or "regular"
  std::vector<std::vector<EdgeId>> parts;
  std::vector<CheckEntry> checks;
};

std::string partition_to_json(const Graph& g, const std::vector<PartitionSection>& sections);

std::string audit_to_json(const AuditReport& report);
std::string audit_to_text(const AuditReport& report);

std::string checks_to_text(const std::vector<CheckEntry>& checks);

}  // namespace avdc
