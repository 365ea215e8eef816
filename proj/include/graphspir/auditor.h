#pragma once

// Exhaustive, exact verification of the three SPIR constraints on small
// instances.
//
// Messages, pads and user randomness are i.i.d. uniform over F_q, so every
// joint realization is equally likely and an enumeration with unit counts is
// the exact joint distribution. All verdicts come from integer count tables.
//
//  * Reliability: the decoded value equals W_theta in every realization.
//  * User privacy: for every server n, the table of (Q_n, A_n, W_n, R_n) is
//    the same for every theta.
//  * Database privacy: for every theta and every nonempty J in [K] \ {theta},
//    W_J is independent of the user's view (all answers, all queries, the
//    pads outside J, the messages outside J and theta, and h).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphspir/distribution.h"
#include "graphspir/field.h"
#include "graphspir/graph.h"
#include "graphspir/protocol.h"
#include "graphspir/rational.h"

namespace graphspir {

inline constexpr std::uint64_t kDefaultAuditBudget = std::uint64_t{1} << 24;

enum class Execution {
  // One outcome at a time, every transcript rebuilt from scratch.
  kReference,
  // Outcome space split into chunks across OpenMP threads; each chunk walks
  // its outcomes incrementally.
  kParallel,
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what_check, std::uint32_t base, std::size_t exponent,
                 std::uint64_t budget);

  std::uint32_t base() const { return base_; }
  std::size_t exponent() const { return exponent_; }
  std::uint64_t budget() const { return budget_; }
  // Decimal q^e, exact.
  std::string required_size() const;

 private:
  std::uint32_t base_;
  std::size_t exponent_;
  std::uint64_t budget_;
};

struct AuditConfig {
  Graph graph;
  FieldSpec field;
  std::size_t message_length = 1;
  // Defaults to message_length. Zero gives the pad-free (rho = 0) scheme.
  std::optional<std::size_t> pad_length{};
  std::uint64_t budget = kDefaultAuditBudget;
  Execution execution = Execution::kParallel;
  // When set, reliability and database privacy only run for this index.
  // User privacy always compares every theta.
  std::optional<MessageId> theta{};
  // Not owned. nullptr means the honest scheme with the default placement.
  const RetrievalScheme* scheme = nullptr;

  std::size_t effective_pad_length() const {
    return pad_length.value_or(message_length);
  }
};

enum class Constraint { kReliability, kUserPrivacy, kDatabasePrivacy };

std::string ToString(Constraint c);

struct Witness {
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> values;
  std::vector<std::pair<std::string, std::uint64_t>> counts;
};

struct CheckRecord {
  Constraint constraint = Constraint::kReliability;
  MessageId theta = 0;
  std::optional<MessageId> reference_theta;  // user privacy
  std::optional<VertexId> server;            // user privacy
  std::vector<MessageId> subset;             // database privacy J
  bool passed = false;
  std::uint64_t outcomes = 0;
  std::optional<Witness> witness;
};

struct AuditReport {
  std::string graph;
  std::uint32_t q = 0;
  std::size_t message_length = 0;
  std::size_t pad_length = 0;
  std::uint64_t joint_outcomes_per_theta = 0;
  std::vector<CheckRecord> checks;

  bool AllPassed() const;
  bool AllPassed(Constraint c) const;
  std::size_t CountChecks(Constraint c) const;
};

// Sizes of the spaces each check enumerates. Throw BudgetExceeded when over.
std::uint64_t JointOutcomeCount(const AuditConfig& config);
std::uint64_t ServerViewOutcomeCount(const AuditConfig& config, VertexId n);

// Full joint table over (W, R, h, Q_1..Q_N, A_1..A_N) for one theta, each
// realization with count 1. Component order: W_k slots (k-major), R_k slots,
// h per slot (slot-major), then every query coefficient server by server,
// then every answer symbol server by server.
ExactDistribution EnumerateTranscripts(const AuditConfig& config, MessageId theta);

// Exact marginal of (Q_n, A_n, W_n, R_n) for one server and theta. Only h and
// the server's own messages and pads are enumerated; the remaining inputs
// cannot influence this tuple (queries depend on h and theta alone, and an
// answer reads only the server's store), so each cell is weighted by
// q^(number of remaining input symbols).
ExactDistribution ServerViewDistribution(const AuditConfig& config, VertexId n,
                                         MessageId theta);

std::vector<CheckRecord> CheckReliability(const AuditConfig& config);
std::vector<CheckRecord> CheckUserPrivacy(const AuditConfig& config);
std::vector<CheckRecord> CheckDatabasePrivacy(const AuditConfig& config);

// All three checks. Every budget is checked before any enumeration starts.
AuditReport RunAudit(const AuditConfig& config);

Rational RandomnessRatio(const SystemState& state);

}  // namespace graphspir
