#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "avdc/avd.hpp"
#include "avdc/errors.hpp"
#include "avdc/generators.hpp"
#include "avdc/partition.hpp"
#include "avdc/serialize.hpp"
#include "avdc/verify.hpp"
#include "avdc/vizing.hpp"
#include "support/oracles.hpp"

using namespace avdc;

namespace {

const CheckEntry* find_check(const std::vector<CheckEntry>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(CheckProper, Examples) {
  Graph c3 = cycle_graph(3);
  ProperCheck bad = check_proper(c3, EdgeColoring(std::vector<Color>{1, 1, 1}));
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.conflict.has_value());
  EXPECT_NE(bad.conflict->first, bad.conflict->second);
  EXPECT_EQ(bad.color, 1);

  EXPECT_TRUE(check_proper(Graph(2, {{0, 1}}), EdgeColoring(std::vector<Color>{1})).ok);
  EXPECT_THROW(check_proper(c3, EdgeColoring(std::vector<Color>{1, 2, 0})),
               IncompleteColoringError);
  EXPECT_THROW(check_proper(c3, EdgeColoring(std::vector<Color>{1, 2})), IncompleteColoringError);
}

TEST(CheckProper, AcceptsMisraGries) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gnp_graph(30, 0.2, seed);
    EXPECT_TRUE(check_proper(g, misra_gries(g)).ok);
  }
}

TEST(CheckAvd, Examples) {
  Graph c4 = cycle_graph(4);
  std::vector<Color> alt(4);
  for (EdgeIndex e = 0; e < 4; ++e) {
    const EdgeId& id = c4.edge(e);
    alt[e] = (id == EdgeId{0, 1} || id == EdgeId{2, 3}) ? 1 : 2;
  }
  AvdCheck r = check_avd(c4, EdgeColoring(alt));
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.pair.has_value());
  EXPECT_EQ(r.shared_set, (std::vector<Color>{1, 2}));

  Graph p3(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(check_avd(p3, EdgeColoring(std::vector<Color>{1, 2})).ok);
  EXPECT_THROW(check_avd(p3, EdgeColoring(std::vector<Color>{1, 1})), ImproperColoringError);
}

TEST(ExactChiA, SpotValues) {
  EXPECT_EQ(exact_chi_a(Graph(3, {{0, 1}, {1, 2}})), 2);
  EXPECT_EQ(exact_chi_a(cycle_graph(5)), 5);
  EXPECT_EQ(exact_chi_a(complete_graph(4)), 5);
  EXPECT_EQ(exact_chi_a(cycle_graph(6)), 3);
  EXPECT_EQ(exact_chi_a(cycle_graph(5), 4), std::nullopt);
  EXPECT_THROW(exact_chi_a(Graph(2, {{0, 1}})), NotNormalError);
  EXPECT_THROW(exact_chi_a(complete_graph(7)), PreconditionError);
}

TEST(ExactChromaticIndex, SpotValues) {
  EXPECT_EQ(exact_chromatic_index(cycle_graph(5)), 3);
  EXPECT_EQ(exact_chromatic_index(complete_graph(4)), 3);
  EXPECT_EQ(exact_chromatic_index(petersen_graph()), 4);
  EXPECT_EQ(exact_chromatic_index(complete_graph(5)), 5);
  EXPECT_THROW(exact_chromatic_index(complete_graph(7)), PreconditionError);
}

// Property: Δ <= chi' <= chi'_a <= avd_color colours <= general bound.
TEST(Oracles, ChainOfInequalities) {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 80; ++seed) {
    Rng rng(seed);
    Graph g = oracle::random_normal_graph(rng, 4, 10, 2, 6);
    if (g.edge_count() > 14) continue;
    ++tested;
    const int chi = exact_chromatic_index(g);
    const auto chi_a = exact_chi_a(g);
    ASSERT_TRUE(chi_a.has_value());
    const int used = avd_color(g).colors_used;
    EXPECT_LE(g.max_degree(), chi);
    EXPECT_LE(chi, g.max_degree() + 1);
    EXPECT_LE(chi, *chi_a);
    EXPECT_LE(*chi_a, used);
    EXPECT_LE(used, general_bound(g.max_degree()));
  }
}

TEST(VerifyCertificate, DetectsTampering) {
  Graph p = petersen_graph();
  AvdCertificate cert = avd_color(p);
  EXPECT_TRUE(all_pass(verify_certificate(p, cert)));

  AvdCertificate wrong_count = cert;
  wrong_count.colors_used += 1;
  EXPECT_FALSE(find_check(verify_certificate(p, wrong_count), "colors_used matches colouring")->pass);

  AvdCertificate over = cert;
  over.bound_claimed = cert.colors_used - 1;
  EXPECT_FALSE(find_check(verify_certificate(p, over), "colors_used <= bound_claimed")->pass);

  AvdCertificate clash = cert;
  const Incidence& a = p.incident(0)[0];
  const Incidence& b = p.incident(0)[1];
  clash.coloring.set(a.edge, clash.coloring[b.edge]);
  auto checks = verify_certificate(p, clash);
  EXPECT_FALSE(find_check(checks, "proper")->pass);
  EXPECT_FALSE(all_pass(checks));

  AvdCertificate missing = cert;
  missing.coloring.set(3, 0);
  EXPECT_FALSE(find_check(verify_certificate(p, missing), "complete")->pass);
}

TEST(VerifyCertificate, BadWitness) {
  Graph c5 = cycle_graph(5);
  AvdCertificate cert = avd_color(c5);
  ASSERT_FALSE(cert.witnesses.empty());
  cert.witnesses[0].color = 63;
  EXPECT_FALSE(find_check(verify_certificate(c5, cert), "witnesses valid")->pass);
}

TEST(PartitionChecks, AcceptEngineOutputRejectBadSplits) {
  Graph k7 = complete_graph(7);
  EdgePartition p = partition_p1(k7);
  EXPECT_TRUE(all_pass(check_partition_p1(k7, p.parts())));

  auto swapped = p.parts();
  std::swap(swapped[0], swapped[1]);
  EXPECT_FALSE(all_pass(check_partition_p1(k7, swapped)));

  auto dropped = p.parts();
  dropped[1].pop_back();
  EXPECT_FALSE(find_check(check_partition_p1(k7, dropped), "parts disjoint and covering")->pass);

  EXPECT_FALSE(all_pass(check_partition_regular(k7, {k7.edges()})));
  EXPECT_FALSE(all_pass(check_partition_regular(cycle_graph(5), {cycle_graph(5).edges()})));
}

TEST(Audit, K7AllPass) {
  AuditReport r = audit(complete_graph(7));
  EXPECT_TRUE(r.pass()) << audit_to_text(r);
  EXPECT_EQ(r.graph.n, 7);
  EXPECT_TRUE(r.graph.regular);
  bool saw_p1 = false;
  for (const auto& c : r.checks) saw_p1 = saw_p1 || c.name.rfind("p1: ", 0) == 0;
  EXPECT_TRUE(saw_p1);
  // 21 edges exceed the default oracle cap.
  ASSERT_FALSE(r.notes.empty());
}

TEST(Audit, PetersenWithOracle) {
  Graph p = petersen_graph();
  AuditReport r = audit(p);
  EXPECT_TRUE(r.pass()) << audit_to_text(r);
  const BoundRow* row = nullptr;
  for (const auto& b : r.bound_table)
    if (b.rule == "oracle chi'_a") row = &b;
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->claimed, 4);
  EXPECT_LE(row->claimed, row->certified);
  EXPECT_LE(row->certified, 5);
}

TEST(Audit, NonNormalSingleFailure) {
  AuditReport r = audit(Graph(4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].name, "precondition: normal");
  EXPECT_FALSE(r.pass());
}

TEST(Serialize, CertificateRoundTrip) {
  Graph g = oracle::strip_to_normal(gnp_graph(25, 0.3, 2));
  AvdCertificate cert = avd_color(g);
  std::string text = certificate_to_json(g, cert);
  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["format"], "avdc-certificate");
  EXPECT_EQ(j["colors_used"], cert.colors_used);
  EXPECT_EQ(j["edges"].size(), static_cast<std::size_t>(g.edge_count()));
  CertificateDocument doc = certificate_from_json(g, text);
  EXPECT_EQ(doc.certificate.coloring, cert.coloring);
  EXPECT_EQ(doc.certificate.witnesses, cert.witnesses);
  EXPECT_TRUE(doc.foreign_edges.empty());
  EXPECT_TRUE(all_pass(verify_certificate(g, doc.certificate)));
  EXPECT_EQ(certificate_to_json(g, doc.certificate), text);
}

TEST(Serialize, RejectsMalformed) {
  Graph c5 = cycle_graph(5);
  EXPECT_THROW(certificate_from_json(c5, "{"), ParseError);
  EXPECT_THROW(certificate_from_json(c5, R"({"format":"other"})"), ParseError);
}

TEST(Serialize, BoundArithmetic) {
  EXPECT_EQ(bound_arithmetic("general", 6, 20), "floor(5(6+2)/2) = 20");
}

TEST(Serialize, AuditJson) {
  AuditReport r = audit(cycle_graph(5));
  auto j = nlohmann::json::parse(audit_to_json(r));
  EXPECT_EQ(j["format"], "avdc-audit");
  EXPECT_EQ(j["pass"], r.pass());
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  std::string text = audit_to_text(r);
  EXPECT_NE(text.find("overall PASS"), std::string::npos);
}
