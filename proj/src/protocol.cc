#include "graphspir/protocol.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphspir {

SystemState::SystemState(Graph graph, FieldSpec field, std::size_t message_length,
                         std::optional<std::size_t> pad_length)
    : graph_(std::move(graph)),
      field_(field),
      message_length_(message_length),
      pad_length_(pad_length.value_or(message_length)) {
  if (message_length_ < 1) throw std::invalid_argument("message length must be >= 1");
  const std::size_t n = graph_.vertex_count();
  stores_.resize(n);
  for (VertexId v = 1; v <= n; ++v) {
    ServerStore& s = stores_[v - 1];
    s.server = v;
    s.field = field_;
    s.message_length = message_length_;
    s.pad_length = pad_length_;
    s.messages = graph_.IncidentMessages(v);
    for (MessageId k : s.messages) s.signs.push_back(graph_.Sign(v, k));
    s.message_symbols.assign(s.degree() * message_length_, field_.Zero());
    s.pad_symbols.assign(s.degree() * pad_length_, field_.Zero());
  }
  placements_.resize(graph_.edge_count());
  for (MessageId k = 1; k <= graph_.edge_count(); ++k) {
    const auto [i, j] = graph_.MessageHolders(k);
    auto position = [&](VertexId v) {
      const auto& list = stores_[v - 1].messages;
      return static_cast<std::size_t>(std::find(list.begin(), list.end(), k) -
                                      list.begin());
    };
    placements_[k - 1] = {position(i), position(j)};
  }
}

SystemState SystemState::Random(Graph graph, FieldSpec field,
                                std::size_t message_length, Rng& rng,
                                std::optional<std::size_t> pad_length) {
  SystemState state(std::move(graph), field, message_length, pad_length);
  const std::size_t k_count = state.graph().edge_count();
  for (MessageId k = 1; k <= k_count; ++k) {
    state.SetMessage(k, SampleUniformVector(rng, field, state.message_length()));
  }
  for (MessageId k = 1; k <= k_count; ++k) {
    state.SetPad(k, SampleUniformVector(rng, field, state.pad_length()));
  }
  return state;
}

const ServerStore& SystemState::store(VertexId n) const {
  if (n < 1 || n > stores_.size()) {
    throw std::out_of_range("unknown server " + std::to_string(n));
  }
  return stores_[n - 1];
}

std::vector<FieldElement> SystemState::Message(MessageId k) const {
  const auto [i, j] = graph_.MessageHolders(k);
  const auto span = stores_[i - 1].message(placements_[k - 1].lower_position);
  return {span.begin(), span.end()};
}

std::vector<FieldElement> SystemState::Pad(MessageId k) const {
  const auto [i, j] = graph_.MessageHolders(k);
  const auto span = stores_[i - 1].pad(placements_[k - 1].lower_position);
  return {span.begin(), span.end()};
}

void SystemState::SetMessageSymbol(MessageId k, std::size_t slot,
                                   FieldElement value) {
  if (slot >= message_length_) throw std::out_of_range("message slot out of range");
  if (value.modulus() != field_.modulus()) throw FieldMismatch("message symbol field");
  const auto [i, j] = graph_.MessageHolders(k);
  const Placement& p = placements_[k - 1];
  stores_[i - 1].message_symbols[p.lower_position * message_length_ + slot] = value;
  stores_[j - 1].message_symbols[p.upper_position * message_length_ + slot] = value;
}

void SystemState::SetPadSymbol(MessageId k, std::size_t slot, FieldElement value) {
  if (slot >= pad_length_) throw std::out_of_range("pad slot out of range");
  if (value.modulus() != field_.modulus()) throw FieldMismatch("pad symbol field");
  const auto [i, j] = graph_.MessageHolders(k);
  const Placement& p = placements_[k - 1];
  stores_[i - 1].pad_symbols[p.lower_position * pad_length_ + slot] = value;
  stores_[j - 1].pad_symbols[p.upper_position * pad_length_ + slot] = value;
}

void SystemState::SetMessage(MessageId k, std::span<const FieldElement> symbols) {
  if (symbols.size() != message_length_) {
    throw std::invalid_argument("message has " + std::to_string(symbols.size()) +
                                " symbols, expected " +
                                std::to_string(message_length_));
  }
  for (std::size_t t = 0; t < symbols.size(); ++t) SetMessageSymbol(k, t, symbols[t]);
}

void SystemState::SetPad(MessageId k, std::span<const FieldElement> symbols) {
  if (symbols.size() != pad_length_) {
    throw std::invalid_argument("pad has " + std::to_string(symbols.size()) +
                                " symbols, expected " + std::to_string(pad_length_));
  }
  for (std::size_t t = 0; t < symbols.size(); ++t) SetPadSymbol(k, t, symbols[t]);
}

bool SystemState::IsConsistent() const {
  for (MessageId k = 1; k <= graph_.edge_count(); ++k) {
    const auto [i, j] = graph_.MessageHolders(k);
    const Placement& p = placements_[k - 1];
    const auto wi = stores_[i - 1].message(p.lower_position);
    const auto wj = stores_[j - 1].message(p.upper_position);
    const auto ri = stores_[i - 1].pad(p.lower_position);
    const auto rj = stores_[j - 1].pad(p.upper_position);
    if (!std::equal(wi.begin(), wi.end(), wj.begin(), wj.end())) return false;
    if (!std::equal(ri.begin(), ri.end(), rj.begin(), rj.end())) return false;
  }
  return true;
}

VertexId UnitHolder(const Graph& g, MessageId theta, UnitPlacement placement) {
  const auto [i, j] = g.MessageHolders(theta);
  switch (placement) {
    case UnitPlacement::kLargerIndexHolder:
      return j;
    case UnitPlacement::kHigherDegreeHolder:
      return g.Degree(i) > g.Degree(j) ? i : j;
  }
  return j;
}

void GenerateQueriesInto(const Graph& g, const FieldSpec& field, MessageId theta,
                         std::span<const UserRandomness> slots,
                         UnitPlacement placement, std::vector<Query>& out) {
  const std::size_t k_count = g.edge_count();
  if (theta < 1 || theta > k_count) {
    throw std::out_of_range("theta " + std::to_string(theta) + " outside [1, " +
                            std::to_string(k_count) + "]");
  }
  for (const UserRandomness& u : slots) {
    if (u.h.size() != k_count) {
      throw std::invalid_argument("user randomness has " +
                                  std::to_string(u.h.size()) +
                                  " symbols, expected K=" + std::to_string(k_count));
    }
  }
  const VertexId unit_server = UnitHolder(g, theta, placement);
  const std::size_t n_count = g.vertex_count();
  out.resize(n_count);
  for (VertexId n = 1; n <= n_count; ++n) {
    const auto& incident = g.IncidentMessages(n);
    Query& q = out[n - 1];
    q.degree = incident.size();
    q.coefficients.resize(q.degree * slots.size());
    for (std::size_t t = 0; t < slots.size(); ++t) {
      for (std::size_t pos = 0; pos < incident.size(); ++pos) {
        const MessageId l = incident[pos];
        FieldElement c = field.FromSign(g.Sign(n, l)) * slots[t].h[l - 1];
        if (n == unit_server && l == theta) c += field.One();
        q.coefficients[t * q.degree + pos] = c;
      }
    }
  }
}

std::vector<Query> GenerateQueries(const Graph& g, const FieldSpec& field,
                                   MessageId theta,
                                   std::span<const UserRandomness> slots,
                                   UnitPlacement placement) {
  std::vector<Query> out;
  GenerateQueriesInto(g, field, theta, slots, placement, out);
  return out;
}

std::vector<Query> GenerateQueries(const Graph& g, const FieldSpec& field,
                                   MessageId theta, const UserRandomness& u,
                                   UnitPlacement placement) {
  return GenerateQueries(g, field, theta, std::span(&u, 1), placement);
}

void ServerAnswerInto(const ServerStore& store, const Query& query, Answer& out) {
  const std::size_t degree = store.degree();
  const std::size_t slots = store.message_length;
  if (query.degree != degree || query.coefficients.size() != degree * slots) {
    throw std::invalid_argument(
        "query for server " + std::to_string(store.server) + " has " +
        std::to_string(query.coefficients.size()) + " coefficients, expected " +
        std::to_string(degree * slots));
  }
  const std::uint64_t q = store.field.modulus();
  // Below 2^16 a whole slot accumulates without overflow before one reduction.
  const bool lazy = q < (std::uint64_t{1} << 16);
  out.symbols.resize(slots);
  for (std::size_t t = 0; t < slots; ++t) {
    std::uint64_t acc = 0;
    for (std::size_t pos = 0; pos < degree; ++pos) {
      const FieldElement& c = query.coefficients[t * degree + pos];
      const FieldElement& w = store.message_symbols[pos * slots + t];
      if (c.modulus() != q) throw FieldMismatch("query coefficient field");
      acc += std::uint64_t{c.value()} * w.value();
      if (!lazy) acc %= q;
    }
    if (t < store.pad_length) {
      for (std::size_t pos = 0; pos < degree; ++pos) {
        const std::uint64_t r = store.pad_symbols[pos * store.pad_length + t].value();
        acc += store.signs[pos] > 0 ? r : q - r;
        if (!lazy) acc %= q;
      }
    }
    out.symbols[t] = store.field.Element(acc);
  }
}

Answer ServerAnswer(const ServerStore& store, const Query& query) {
  Answer out;
  ServerAnswerInto(store, query, out);
  return out;
}

void DecodeInto(std::span<const Answer> answers, std::vector<FieldElement>& out) {
  if (answers.empty()) throw std::invalid_argument("no answers to decode");
  const std::size_t slots = answers.front().symbols.size();
  out.assign(answers.front().symbols.begin(), answers.front().symbols.end());
  for (std::size_t n = 1; n < answers.size(); ++n) {
    if (answers[n].symbols.size() != slots) {
      throw std::invalid_argument("answers have mismatched lengths");
    }
    for (std::size_t t = 0; t < slots; ++t) out[t] += answers[n].symbols[t];
  }
}

std::vector<FieldElement> Decode(std::span<const Answer> answers) {
  std::vector<FieldElement> out;
  DecodeInto(answers, out);
  return out;
}

void RetrievalScheme::MakeQueries(const Graph& g, const FieldSpec& field,
                                  MessageId theta,
                                  std::span<const UserRandomness> slots,
                                  std::vector<Query>& out) const {
  GenerateQueriesInto(g, field, theta, slots, placement_, out);
}

void RetrievalScheme::Respond(const ServerStore& store, const Query& query,
                              Answer& out) const {
  ServerAnswerInto(store, query, out);
}

void RetrievalScheme::Reconstruct(std::span<const Answer> answers,
                                  std::vector<FieldElement>& out) const {
  DecodeInto(answers, out);
}

RoundTranscript RunRound(const SystemState& state, MessageId theta, Rng& rng,
                         const RetrievalScheme& scheme) {
  const Graph& g = state.graph();
  RoundTranscript tr;
  tr.theta = theta;
  tr.randomness.resize(state.message_length());
  for (UserRandomness& u : tr.randomness) {
    u.h = SampleUniformVector(rng, state.field(), g.edge_count());
  }
  scheme.MakeQueries(g, state.field(), theta, tr.randomness, tr.queries);
  tr.answers.resize(g.vertex_count());
  for (VertexId n = 1; n <= g.vertex_count(); ++n) {
    scheme.Respond(state.store(n), tr.queries[n - 1], tr.answers[n - 1]);
  }
  scheme.Reconstruct(tr.answers, tr.decoded);
  for (const Answer& a : tr.answers) tr.downloaded_symbols += a.symbols.size();
  return tr;
}

}  // namespace graphspir
