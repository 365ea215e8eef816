#pragma once

// Deliberately broken schemes. The auditor must reject each of them; they
// exist so that the audit failure paths are exercised.

#include <span>
#include <vector>

#include "graphspir/protocol.h"

namespace graphspir {

// Decodes from all answers but the last one.
class DroppedAnswerScheme : public RetrievalScheme {
 public:
  using RetrievalScheme::RetrievalScheme;

  void Reconstruct(std::span<const Answer> answers,
                   std::vector<FieldElement>& out) const override {
    if (answers.size() < 2) {
      RetrievalScheme::Reconstruct(answers, out);
      return;
    }
    RetrievalScheme::Reconstruct(answers.first(answers.size() - 1), out);
  }
};

// Sends the bare unit vector: every h is treated as zero, so the unit holder
// sees exactly which message is wanted.
class UnmaskedQueryScheme : public RetrievalScheme {
 public:
  using RetrievalScheme::RetrievalScheme;

  void MakeQueries(const Graph& g, const FieldSpec& field, MessageId theta,
                   std::span<const UserRandomness> slots,
                   std::vector<Query>& out) const override {
    std::vector<UserRandomness> zero(slots.size());
    for (UserRandomness& u : zero) u.h.assign(g.edge_count(), field.Zero());
    RetrievalScheme::MakeQueries(g, field, theta, zero, out);
  }
};

}  // namespace graphspir
