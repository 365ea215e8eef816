#pragma once

// The graph-replicated symmetric PIR scheme.
//
// Storage: message W_k and its pad R_k (both uniform over F_q) live on the two
// endpoints of edge k. A retrieval of W_theta over one symbol slot works as
// follows. The user draws h_1..h_K uniformly and sends server n the nonzero
// entries of row n of Ibar(G) * diag(h), aligned with the server's ascending
// message list. One chosen holder of W_theta additionally gets a unit vector
// selecting W_theta. Server n answers
//
//   A_n = <Q_n, W_n> + sum_{l in F_n} Ibar(n, l) * R_l
//
// and the user adds up all N answers. Every column of Ibar(G) sums to zero,
// so the masked messages and the pads cancel and exactly W_theta remains.
//
// Messages of L symbols are retrieved as L independent single-symbol rounds
// with fresh user randomness per slot; pad slot t masks message slot t.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graphspir/field.h"
#include "graphspir/graph.h"

namespace graphspir {

// What a single server holds: its ascending message list F_n, the signs of
// its row of the signed incidence matrix, and its message and pad copies.
struct ServerStore {
  VertexId server = 0;
  FieldSpec field{2};
  std::size_t message_length = 0;
  std::size_t pad_length = 0;
  std::vector<MessageId> messages;
  std::vector<int> signs;
  // messages.size() x message_length, row-major.
  std::vector<FieldElement> message_symbols;
  // messages.size() x pad_length, row-major.
  std::vector<FieldElement> pad_symbols;

  std::size_t degree() const { return messages.size(); }
  std::span<const FieldElement> message(std::size_t position) const {
    return std::span(message_symbols).subspan(position * message_length,
                                              message_length);
  }
  std::span<const FieldElement> pad(std::size_t position) const {
    return std::span(pad_symbols).subspan(position * pad_length, pad_length);
  }
};

// Replicated storage for all N servers.
class SystemState {
 public:
  // All messages and pads zero. pad_length defaults to message_length
  // (randomness ratio 1); smaller values build degraded fixtures.
  SystemState(Graph graph, FieldSpec field, std::size_t message_length,
              std::optional<std::size_t> pad_length = std::nullopt);

  // Messages then pads drawn i.i.d. uniform, message 1 first, slot by slot.
  static SystemState Random(Graph graph, FieldSpec field,
                            std::size_t message_length, Rng& rng,
                            std::optional<std::size_t> pad_length = std::nullopt);

  const Graph& graph() const { return graph_; }
  const FieldSpec& field() const { return field_; }
  std::size_t message_length() const { return message_length_; }
  std::size_t pad_length() const { return pad_length_; }
  const ServerStore& store(VertexId n) const;
  const std::vector<ServerStore>& stores() const { return stores_; }

  // Canonical copy, read from the lower-indexed holder.
  std::vector<FieldElement> Message(MessageId k) const;
  std::vector<FieldElement> Pad(MessageId k) const;

  // Writes to both holders.
  void SetMessageSymbol(MessageId k, std::size_t slot, FieldElement value);
  void SetPadSymbol(MessageId k, std::size_t slot, FieldElement value);
  void SetMessage(MessageId k, std::span<const FieldElement> symbols);
  void SetPad(MessageId k, std::span<const FieldElement> symbols);

  // True iff both copies of every message and pad agree.
  bool IsConsistent() const;

 private:
  struct Placement {
    std::size_t lower_position;
    std::size_t upper_position;
  };

  Graph graph_;
  FieldSpec field_;
  std::size_t message_length_;
  std::size_t pad_length_;
  std::vector<ServerStore> stores_;
  std::vector<Placement> placements_;
};

struct UserRandomness {
  std::vector<FieldElement> h;
};

// Coefficients sent to one server: one block of degree() coefficients per
// symbol slot, aligned with the server's ascending message list.
struct Query {
  std::size_t degree = 0;
  std::vector<FieldElement> coefficients;

  std::size_t slot_count() const {
    return degree == 0 ? 0 : coefficients.size() / degree;
  }
  std::span<const FieldElement> slot(std::size_t t) const {
    return std::span(coefficients).subspan(t * degree, degree);
  }
};

struct Answer {
  std::vector<FieldElement> symbols;
};

// Which holder of W_theta gets the unit vector. Any holder yields a correct
// and private scheme.
enum class UnitPlacement {
  // The upper endpoint, i.e. the -1 entry of the column.
  kLargerIndexHolder,
  // The holder of larger degree; ties go to the larger index.
  kHigherDegreeHolder,
};

VertexId UnitHolder(const Graph& g, MessageId theta, UnitPlacement placement);

// Queries for all N servers, one slot per element of `slots`. Depends only on
// the graph, theta and the user randomness.
std::vector<Query> GenerateQueries(
    const Graph& g, const FieldSpec& field, MessageId theta,
    std::span<const UserRandomness> slots,
    UnitPlacement placement = UnitPlacement::kLargerIndexHolder);
std::vector<Query> GenerateQueries(
    const Graph& g, const FieldSpec& field, MessageId theta,
    const UserRandomness& u,
    UnitPlacement placement = UnitPlacement::kLargerIndexHolder);
// Allocation-reusing form for enumeration loops.
void GenerateQueriesInto(const Graph& g, const FieldSpec& field, MessageId theta,
                         std::span<const UserRandomness> slots,
                         UnitPlacement placement, std::vector<Query>& out);

// A server's answer sees only its own store and its own query.
Answer ServerAnswer(const ServerStore& store, const Query& query);
void ServerAnswerInto(const ServerStore& store, const Query& query, Answer& out);

// Componentwise sum of all answers.
std::vector<FieldElement> Decode(std::span<const Answer> answers);
void DecodeInto(std::span<const Answer> answers, std::vector<FieldElement>& out);

// The three parties' steps as overridable hooks. The auditor drives any
// scheme through this interface so sabotaged variants can be audited too.
class RetrievalScheme {
 public:
  explicit RetrievalScheme(
      UnitPlacement placement = UnitPlacement::kLargerIndexHolder)
      : placement_(placement) {}
  virtual ~RetrievalScheme() = default;

  UnitPlacement placement() const { return placement_; }

  virtual void MakeQueries(const Graph& g, const FieldSpec& field,
                           MessageId theta, std::span<const UserRandomness> slots,
                           std::vector<Query>& out) const;
  virtual void Respond(const ServerStore& store, const Query& query,
                       Answer& out) const;
  virtual void Reconstruct(std::span<const Answer> answers,
                           std::vector<FieldElement>& out) const;

 private:
  UnitPlacement placement_;
};

struct RoundTranscript {
  MessageId theta = 0;
  std::vector<UserRandomness> randomness;  // one per symbol slot
  std::vector<Query> queries;              // one per server
  std::vector<Answer> answers;             // one per server
  std::vector<FieldElement> decoded;
  std::size_t downloaded_symbols = 0;
};

// Draws fresh user randomness for each of the L slots (slot 1 first, K
// symbols each), then queries, answers and decodes.
RoundTranscript RunRound(const SystemState& state, MessageId theta, Rng& rng,
                         const RetrievalScheme& scheme = RetrievalScheme());

}  // namespace graphspir
