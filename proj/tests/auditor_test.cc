#include "graphspir/auditor.h"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "fixtures.h"
#include "graphspir/sabotage.h"

namespace graphspir {
namespace {

using testing::C3;
using testing::InstanceOf;
using testing::M;
using testing::P3;
using testing::S4;

AuditConfig Config(const Graph& g, std::uint32_t q, std::size_t l = 1) {
  return AuditConfig{g, FieldSpec(q), l};
}

std::vector<CheckRecord> Failed(const std::vector<CheckRecord>& records) {
  std::vector<CheckRecord> out;
  for (const auto& r : records) {
    if (!r.passed) out.push_back(r);
  }
  return out;
}

// Exhaustive oracle for one slot: visits every (W, R, h) with plain integers.
template <typename F>
void ForEachRealization(const Graph& g, int q, F f) {
  const int k = static_cast<int>(g.edge_count());
  oracle::ForEachVector(q, 3 * k, [&](const std::vector<int>& v) {
    const std::vector<int> w(v.begin(), v.begin() + k);
    const std::vector<int> r(v.begin() + k, v.begin() + 2 * k);
    const std::vector<int> h(v.begin() + 2 * k, v.end());
    f(w, r, h);
  });
}

TEST(OutcomeCountTest, SmallInstances) {
  EXPECT_EQ(JointOutcomeCount(Config(P3(), 2)), 64u);
  EXPECT_EQ(JointOutcomeCount(Config(C3(), 2)), 512u);
  AuditConfig degraded = Config(P3(), 2, 2);
  degraded.pad_length = 1;
  EXPECT_EQ(JointOutcomeCount(degraded), 1024u);  // 2 * (2 + 1 + 2) digits
  // Server 2 of P3 sees h (2), W1, W2, R1, R2.
  EXPECT_EQ(ServerViewOutcomeCount(Config(P3(), 2), 2), 64u);
  EXPECT_EQ(ServerViewOutcomeCount(Config(P3(), 2), 1), 16u);
}

TEST(OutcomeCountTest, BudgetGuard) {
  const AuditConfig c = Config(C3(), 5, 2);
  try {
    JointOutcomeCount(c);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.base(), 5u);
    EXPECT_EQ(e.exponent(), 18u);
    EXPECT_EQ(e.required_size(), "3814697265625");
    EXPECT_EQ(e.budget(), kDefaultAuditBudget);
  }
  EXPECT_THROW(RunAudit(c), BudgetExceeded);
  EXPECT_THROW(EnumerateTranscripts(c, 1), BudgetExceeded);

  AuditConfig tight = Config(P3(), 2);
  tight.budget = 63;
  EXPECT_THROW(RunAudit(tight), BudgetExceeded);
  tight.budget = 64;
  EXPECT_TRUE(RunAudit(tight).AllPassed());
}

TEST(OutcomeCountTest, RequiredSizeBeyond64Bits) {
  const BudgetExceeded e("joint", 3, 60, 10);
  EXPECT_EQ(e.required_size(), "42391158275216203514294433201");
}

TEST(EnumerationTest, EveryRealizationOnce) {
  const ExactDistribution joint = EnumerateTranscripts(Config(P3(), 2), 1);
  EXPECT_EQ(joint.total(), 64u);
  EXPECT_EQ(joint.support_size(), 64u);
  std::vector<std::size_t> inputs(6);
  std::iota(inputs.begin(), inputs.end(), 0);
  const ExactDistribution in = joint.Project(inputs);
  EXPECT_EQ(in.support_size(), 64u);
  for (const auto& [code, count] : in.counts()) EXPECT_EQ(count, 1u);
}

// The recorded transcripts match the closed-form oracle cell by cell.
TEST(EnumerationTest, TranscriptsMatchOracle) {
  for (const Graph& g : {P3(), C3()}) {
    const oracle::Instance inst = InstanceOf(g);
    const int k = static_cast<int>(g.edge_count());
    const int n = static_cast<int>(g.vertex_count());
    for (MessageId theta = 1; theta <= g.edge_count(); ++theta) {
      const ExactDistribution joint = EnumerateTranscripts(Config(g, 2), theta);
      const int holder = static_cast<int>(
          UnitHolder(g, theta, UnitPlacement::kLargerIndexHolder));
      std::uint64_t seen = 0;
      ForEachRealization(g, 2, [&](auto& w, auto& r, auto& h) {
        std::vector<std::uint32_t> outcome;
        for (int x : w) outcome.push_back(x);
        for (int x : r) outcome.push_back(x);
        for (int x : h) outcome.push_back(x);
        for (const auto& qs : oracle::Queries(inst, 2, theta, holder, h)) {
          for (int x : qs) outcome.push_back(x);
        }
        for (int x : oracle::Answers(inst, 2, theta, holder, h, w, r)) {
          outcome.push_back(x);
        }
        ASSERT_EQ(outcome.size(), static_cast<std::size_t>(3 * k + 2 * k + n));
        EXPECT_EQ(joint.Count(outcome), 1u);
        ++seen;
      });
      EXPECT_EQ(seen, joint.total());
    }
  }
}

TEST(ExecutionTest, ReferenceAndParallelAgree) {
  for (const Graph& g : {P3(), C3(), S4()}) {
    AuditConfig par = Config(g, 2);
    AuditConfig ref = par;
    ref.execution = Execution::kReference;
    for (MessageId theta = 1; theta <= g.edge_count(); ++theta) {
      EXPECT_EQ(EnumerateTranscripts(par, theta), EnumerateTranscripts(ref, theta));
      for (VertexId n = 1; n <= g.vertex_count(); ++n) {
        EXPECT_EQ(ServerViewDistribution(par, n, theta),
                  ServerViewDistribution(ref, n, theta));
      }
    }
    const AuditReport a = RunAudit(par);
    const AuditReport b = RunAudit(ref);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
      EXPECT_EQ(a.checks[i].subset, b.checks[i].subset);
    }
  }
}

// The server-view table built from local inputs equals the marginal of the
// full joint table.
TEST(ServerViewTest, LocalRouteEqualsProjectionOfJoint) {
  struct Case {
    Graph g;
    std::uint32_t q;
    std::size_t l;
  };
  for (const Case& c : {Case{P3(), 2, 1}, Case{C3(), 2, 1}, Case{P3(), 3, 1},
                        Case{P3(), 2, 2}, Case{S4(), 2, 1}}) {
    const AuditConfig config = Config(c.g, c.q, c.l);
    const std::size_t k = c.g.edge_count();
    const std::size_t l = c.l;
    const std::size_t inputs = 3 * k * l;
    for (MessageId theta = 1; theta <= k; ++theta) {
      const ExactDistribution joint = EnumerateTranscripts(config, theta);
      for (VertexId n = 1; n <= c.g.vertex_count(); ++n) {
        std::size_t query_offset = inputs;
        for (VertexId m = 1; m < n; ++m) query_offset += c.g.Degree(m) * l;
        std::size_t answer_offset = inputs;
        for (VertexId m = 1; m <= c.g.vertex_count(); ++m) answer_offset += c.g.Degree(m) * l;
        answer_offset += (n - 1) * l;

        std::vector<std::size_t> components;
        for (std::size_t i = 0; i < c.g.Degree(n) * l; ++i) components.push_back(query_offset + i);
        for (std::size_t t = 0; t < l; ++t) components.push_back(answer_offset + t);
        for (MessageId m : c.g.IncidentMessages(n)) {
          for (std::size_t t = 0; t < l; ++t) components.push_back((m - 1) * l + t);
        }
        for (MessageId m : c.g.IncidentMessages(n)) {
          for (std::size_t t = 0; t < l; ++t) components.push_back(k * l + (m - 1) * l + t);
        }
        EXPECT_EQ(ServerViewDistribution(config, n, theta), joint.Project(components))
            << c.g.name() << " n=" << n << " theta=" << theta;
      }
    }
  }
}

TEST(ReliabilityTest, PassesOnSmallGraphs) {
  const auto p3 = CheckReliability(Config(P3(), 2));
  ASSERT_EQ(p3.size(), 2u);
  for (const auto& r : p3) {
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.outcomes, 64u);
  }
  const auto m = CheckReliability(Config(M(), 3));
  ASSERT_EQ(m.size(), 4u);
  EXPECT_TRUE(Failed(m).empty());
}

TEST(ReliabilityTest, DroppedAnswerFailsWithWitness) {
  const DroppedAnswerScheme broken;
  AuditConfig c = Config(P3(), 2);
  c.scheme = &broken;
  const auto records = CheckReliability(c);
  ASSERT_EQ(Failed(records).size(), 2u);
  const CheckRecord& r = records.front();
  ASSERT_TRUE(r.witness);
  // The first failing realization must really fail: decoded != expected.
  std::vector<std::uint32_t> decoded, expected;
  for (const auto& [name, values] : r.witness->values) {
    if (name == "decoded") decoded = values;
    if (name == "expected") expected = values;
  }
  EXPECT_NE(decoded, expected);
  // Dropping A_3 fails whenever A_3 is nonzero. R_2 makes A_3 uniform, so
  // that is half of the 64 realizations over F_2.
  std::uint64_t failures = 0;
  for (const auto& [name, count] : r.witness->counts) {
    if (name == "failures") failures = count;
  }
  EXPECT_EQ(failures, 32u);
}

// Oracle: per-server view tables from plain integers.
std::map<std::vector<int>, std::uint64_t> OracleServerView(const Graph& g, int q,
                                                           MessageId theta, VertexId n) {
  const oracle::Instance inst = InstanceOf(g);
  const int holder = static_cast<int>(UnitHolder(g, theta, UnitPlacement::kLargerIndexHolder));
  std::map<std::vector<int>, std::uint64_t> table;
  ForEachRealization(g, q, [&](auto& w, auto& r, auto& h) {
    std::vector<int> key = oracle::Queries(inst, q, theta, holder, h)[n - 1];
    key.push_back(oracle::Answers(inst, q, theta, holder, h, w, r)[n - 1]);
    for (MessageId m : g.IncidentMessages(n)) key.push_back(w[m - 1]);
    for (MessageId m : g.IncidentMessages(n)) key.push_back(r[m - 1]);
    ++table[key];
  });
  return table;
}

TEST(UserPrivacyTest, OracleTablesIdenticalAcrossTheta) {
  for (const Graph& g : {P3(), C3()}) {
    for (int q : {2, 3}) {
      for (VertexId n = 1; n <= g.vertex_count(); ++n) {
        const auto base = OracleServerView(g, q, 1, n);
        for (MessageId theta = 2; theta <= g.edge_count(); ++theta) {
          EXPECT_EQ(OracleServerView(g, q, theta, n), base);
        }
      }
    }
  }
}

TEST(UserPrivacyTest, LibraryTablesMatchOracle) {
  for (const Graph& g : {P3(), C3()}) {
    const int q = 3;
    const AuditConfig c = Config(g, q);
    for (MessageId theta = 1; theta <= g.edge_count(); ++theta) {
      for (VertexId n = 1; n <= g.vertex_count(); ++n) {
        const auto expected = OracleServerView(g, q, theta, n);
        const ExactDistribution got = ServerViewDistribution(c, n, theta);
        ASSERT_EQ(got.support_size(), expected.size());
        for (const auto& [code, count] : got.counts()) {
          const auto cell = got.Decode(code);
          const std::vector<int> key(cell.begin(), cell.end());
          ASSERT_TRUE(expected.count(key));
          EXPECT_EQ(count, expected.at(key));
        }
      }
    }
  }
}

TEST(UserPrivacyTest, PathServerTwoOverF2) {
  const AuditConfig c = Config(P3(), 2);
  EXPECT_EQ(ServerViewDistribution(c, 2, 1), ServerViewDistribution(c, 2, 2));
  const auto records = CheckUserPrivacy(c);
  EXPECT_EQ(records.size(), 6u);  // 3 servers x 2 theta
  EXPECT_TRUE(Failed(records).empty());
}

TEST(UserPrivacyTest, CycleOverF3) {
  EXPECT_TRUE(Failed(CheckUserPrivacy(Config(C3(), 3))).empty());
}

TEST(UserPrivacyTest, UnmaskedQueriesFailAtUnitHolders) {
  const UnmaskedQueryScheme broken;
  AuditConfig c = Config(P3(), 2);
  c.scheme = &broken;
  const auto failed = Failed(CheckUserPrivacy(c));
  // theta = 1 puts the unit at server 2, theta = 2 at server 3.
  ASSERT_EQ(failed.size(), 2u);
  EXPECT_EQ(failed[0].server, 2u);
  EXPECT_EQ(failed[1].server, 3u);
  for (const auto& r : failed) {
    EXPECT_EQ(r.theta, 2u);
    ASSERT_TRUE(r.witness);
  }
}

// Oracle: W_J against the full user view for one slot.
bool OracleDatabasePrivate(const Graph& g, int q, MessageId theta,
                           const std::vector<MessageId>& j, bool with_pads) {
  const oracle::Instance inst = InstanceOf(g);
  const int holder = static_cast<int>(UnitHolder(g, theta, UnitPlacement::kLargerIndexHolder));
  std::vector<bool> in_j(g.edge_count() + 1, false);
  for (MessageId k : j) in_j[k] = true;
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> joint;
  ForEachRealization(g, q, [&](auto& w, auto& r, auto& h) {
    std::vector<int> a, view;
    for (MessageId k : j) a.push_back(w[k - 1]);
    for (int x : oracle::Answers(inst, q, theta, holder, h, w, r, with_pads)) view.push_back(x);
    for (const auto& qs : oracle::Queries(inst, q, theta, holder, h)) {
      view.insert(view.end(), qs.begin(), qs.end());
    }
    for (MessageId k = 1; k <= g.edge_count(); ++k) {
      if (!in_j[k] && with_pads) view.push_back(r[k - 1]);
    }
    for (MessageId k = 1; k <= g.edge_count(); ++k) {
      if (!in_j[k] && k != theta) view.push_back(w[k - 1]);
    }
    view.insert(view.end(), h.begin(), h.end());
    ++joint[{a, view}];
  });
  return oracle::Independent(joint);
}

TEST(DatabasePrivacyTest, OracleVerdicts) {
  EXPECT_TRUE(OracleDatabasePrivate(P3(), 2, 1, {2}, true));
  EXPECT_TRUE(OracleDatabasePrivate(C3(), 2, 1, {2, 3}, true));
  EXPECT_FALSE(OracleDatabasePrivate(P3(), 2, 1, {2}, false));
}

TEST(DatabasePrivacyTest, LibraryMatchesOracleOnEverySubset) {
  for (const Graph& g : {P3(), C3(), S4()}) {
    for (bool pads : {true, false}) {
      AuditConfig c = Config(g, 2);
      if (!pads) c.pad_length = 0;
      for (const CheckRecord& r : CheckDatabasePrivacy(c)) {
        EXPECT_EQ(r.passed, OracleDatabasePrivate(g, 2, r.theta, r.subset, pads))
            << g.name() << " theta=" << r.theta << " pads=" << pads;
      }
    }
  }
}

TEST(DatabasePrivacyTest, SubsetsInBitmaskOrder) {
  const auto records = CheckDatabasePrivacy(Config(C3(), 2));
  ASSERT_EQ(records.size(), 9u);  // 3 theta x 3 subsets
  EXPECT_EQ(records[0].subset, (std::vector<MessageId>{2}));
  EXPECT_EQ(records[1].subset, (std::vector<MessageId>{3}));
  EXPECT_EQ(records[2].subset, (std::vector<MessageId>{2, 3}));
  EXPECT_EQ(records[3].subset, (std::vector<MessageId>{1}));
  EXPECT_TRUE(Failed(records).empty());
}

TEST(DatabasePrivacyTest, ZeroPadsFailWithWitness) {
  AuditConfig c = Config(P3(), 2);
  c.pad_length = 0;
  c.theta = 1;
  const auto records = CheckDatabasePrivacy(c);
  ASSERT_EQ(records.size(), 1u);
  const CheckRecord& r = records[0];
  EXPECT_EQ(r.subset, (std::vector<MessageId>{2}));
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness);
  std::uint64_t joint = 0, ca = 0, cb = 0, total = 0;
  for (const auto& [name, v] : r.witness->counts) {
    if (name == "joint_count") joint = v;
    if (name == "count_W_J") ca = v;
    if (name == "count_view") cb = v;
    if (name == "total") total = v;
  }
  EXPECT_EQ(total, 16u);
  EXPECT_NE(joint * total, ca * cb);
  EXPECT_TRUE(Failed(CheckReliability(c)).empty());
}

TEST(DatabasePrivacyTest, ShortPadsFail) {
  AuditConfig c = Config(P3(), 2, 2);
  c.pad_length = 1;
  EXPECT_FALSE(Failed(CheckDatabasePrivacy(c)).empty());
  EXPECT_TRUE(Failed(CheckReliability(c)).empty());
}

TEST(AuditTest, FullAuditPassesOnSmallGraphs) {
  for (const Graph& g : {P3(), C3(), S4(), M()}) {
    for (auto placement :
         {UnitPlacement::kLargerIndexHolder, UnitPlacement::kHigherDegreeHolder}) {
      const RetrievalScheme scheme(placement);
      AuditConfig c = Config(g, 2);
      c.scheme = &scheme;
      const AuditReport report = RunAudit(c);
      EXPECT_TRUE(report.AllPassed()) << g.name();
      const std::size_t k = g.edge_count();
      EXPECT_EQ(report.CountChecks(Constraint::kReliability), k);
      EXPECT_EQ(report.CountChecks(Constraint::kUserPrivacy), k * g.vertex_count());
      EXPECT_EQ(report.CountChecks(Constraint::kDatabasePrivacy), k * ((1u << (k - 1)) - 1));
    }
  }
}

// Every check passes on the small-graph grid with L = 1, wherever the joint
// space fits the default budget (all but K4 over F_3).
TEST(AuditTest, SmallGraphGridPasses) {
  int audited = 0;
  for (const Graph& g : {testing::P3(), testing::P4(), C3(), testing::C4(), S4(), M(),
                         testing::K4()}) {
    for (std::uint32_t q : {2u, 3u}) {
      const AuditConfig c = Config(g, q);
      try {
        JointOutcomeCount(c);
      } catch (const BudgetExceeded&) {
        EXPECT_EQ(g.edge_count(), 6u);
        EXPECT_EQ(q, 3u);
        EXPECT_TRUE(Failed(CheckUserPrivacy(c)).empty());
        continue;
      }
      EXPECT_TRUE(RunAudit(c).AllPassed()) << g.name() << " q=" << q;
      ++audited;
    }
  }
  EXPECT_EQ(audited, 13);
}

TEST(AuditTest, ThetaRestrictsReliabilityAndDatabasePrivacy) {
  AuditConfig c = Config(C3(), 2);
  c.theta = 2;
  const AuditReport report = RunAudit(c);
  EXPECT_EQ(report.CountChecks(Constraint::kReliability), 1u);
  EXPECT_EQ(report.CountChecks(Constraint::kUserPrivacy), 9u);
  EXPECT_EQ(report.CountChecks(Constraint::kDatabasePrivacy), 3u);
  c.theta = 4;
  EXPECT_THROW(RunAudit(c), std::out_of_range);
}

TEST(AuditTest, ConstraintNames) {
  EXPECT_EQ(ToString(Constraint::kReliability), "reliability");
  EXPECT_EQ(ToString(Constraint::kUserPrivacy), "user_privacy");
  EXPECT_EQ(ToString(Constraint::kDatabasePrivacy), "database_privacy");
}

}  // namespace
}  // namespace graphspir
