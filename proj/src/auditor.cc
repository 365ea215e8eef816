#include "graphspir/auditor.h"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>

#include <omp.h>

namespace graphspir {

BudgetExceeded::BudgetExceeded(std::string what_check, std::uint32_t base,
                               std::size_t exponent, std::uint64_t budget)
    : std::runtime_error(what_check + " enumeration needs " + std::to_string(base) +
                         "^" + std::to_string(exponent) + " outcomes, budget is " +
                         std::to_string(budget)),
      base_(base),
      exponent_(exponent),
      budget_(budget) {}

std::string BudgetExceeded::required_size() const {
  // Schoolbook decimal power; exponents here stay small.
  std::vector<int> digits{1};
  for (std::size_t e = 0; e < exponent_; ++e) {
    int carry = 0;
    for (int& d : digits) {
      const int v = d * static_cast<int>(base_) + carry;
      d = v % 10;
      carry = v / 10;
    }
    while (carry > 0) {
      digits.push_back(carry % 10);
      carry /= 10;
    }
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out += char('0' + *it);
  return out;
}

std::string ToString(Constraint c) {
  switch (c) {
    case Constraint::kReliability: return "reliability";
    case Constraint::kUserPrivacy: return "user_privacy";
    case Constraint::kDatabasePrivacy: return "database_privacy";
  }
  return "unknown";
}

bool AuditReport::AllPassed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& r) { return r.passed; });
}

bool AuditReport::AllPassed(Constraint c) const {
  return std::all_of(checks.begin(), checks.end(), [c](const CheckRecord& r) {
    return r.constraint != c || r.passed;
  });
}

std::size_t AuditReport::CountChecks(Constraint c) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [c](const CheckRecord& r) { return r.constraint == c; }));
}

Rational RandomnessRatio(const SystemState& state) {
  return Rational(static_cast<std::int64_t>(state.pad_length()),
                  static_cast<std::int64_t>(state.message_length()));
}

namespace {

const RetrievalScheme& SchemeOf(const AuditConfig& config) {
  static const RetrievalScheme kHonest;
  return config.scheme != nullptr ? *config.scheme : kHonest;
}

// q^e, or nullopt past 64 bits.
std::optional<std::uint64_t> Power(std::uint32_t q, std::size_t e) {
  unsigned __int128 v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= q;
    if (v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t CheckedSize(const std::string& what, std::uint32_t q, std::size_t e,
                          std::uint64_t budget) {
  const auto size = Power(q, e);
  if (!size || *size > budget) throw BudgetExceeded(what, q, e, budget);
  return *size;
}

enum class VarKind { kMessage, kPad, kRandomness };

struct Variable {
  VarKind kind;
  MessageId k;
  std::size_t slot;
};

// Low digits first: messages, then pads, then user randomness. The odometer
// turns the low digits fastest, so queries are rebuilt only when h moves.
std::vector<Variable> JointVariables(const AuditConfig& config) {
  const std::size_t k_count = config.graph.edge_count();
  const std::size_t l = config.message_length;
  const std::size_t p = config.effective_pad_length();
  std::vector<Variable> vars;
  for (MessageId k = 1; k <= k_count; ++k) {
    for (std::size_t t = 0; t < l; ++t) vars.push_back({VarKind::kMessage, k, t});
  }
  for (MessageId k = 1; k <= k_count; ++k) {
    for (std::size_t t = 0; t < p; ++t) vars.push_back({VarKind::kPad, k, t});
  }
  for (std::size_t t = 0; t < l; ++t) {
    for (MessageId k = 1; k <= k_count; ++k) {
      vars.push_back({VarKind::kRandomness, k, t});
    }
  }
  return vars;
}

std::vector<Variable> ServerViewVariables(const AuditConfig& config, VertexId n) {
  const std::size_t k_count = config.graph.edge_count();
  const std::size_t l = config.message_length;
  const std::size_t p = config.effective_pad_length();
  const auto& local = config.graph.IncidentMessages(n);
  std::vector<Variable> vars;
  for (MessageId k : local) {
    for (std::size_t t = 0; t < l; ++t) vars.push_back({VarKind::kMessage, k, t});
  }
  for (MessageId k : local) {
    for (std::size_t t = 0; t < p; ++t) vars.push_back({VarKind::kPad, k, t});
  }
  for (std::size_t t = 0; t < l; ++t) {
    for (MessageId k = 1; k <= k_count; ++k) {
      vars.push_back({VarKind::kRandomness, k, t});
    }
  }
  return vars;
}

// Walks realizations of a list of input variables, keeping a live system
// state and lazily recomputing only the transcript parts a change touches.
// Inputs not in the list stay zero.
class Cursor {
 public:
  Cursor(const AuditConfig& config, const RetrievalScheme& scheme, MessageId theta,
         const std::vector<Variable>& vars)
      : config_(config),
        scheme_(scheme),
        theta_(theta),
        vars_(vars),
        state_(config.graph, config.field, config.message_length, config.pad_length),
        randomness_(config.message_length),
        digits_(vars.size(), 0),
        answers_(config.graph.vertex_count()),
        answer_valid_(config.graph.vertex_count(), 0) {
    holders_.reserve(vars.size());
    for (const Variable& v : vars) {
      holders_.push_back(v.kind == VarKind::kRandomness
                             ? std::pair<VertexId, VertexId>{0, 0}
                             : config.graph.MessageHolders(v.k));
    }
    for (UserRandomness& u : randomness_) {
      u.h.assign(config.graph.edge_count(), config.field.Zero());
    }
  }

  void Seek(std::uint64_t index) {
    const std::uint32_t q = config_.field.modulus();
    for (std::size_t d = 0; d < digits_.size(); ++d) {
      digits_[d] = static_cast<std::uint32_t>(index % q);
      index /= q;
      Apply(d);
    }
  }

  void Advance() {
    const std::uint32_t q = config_.field.modulus();
    for (std::size_t d = 0; d < digits_.size(); ++d) {
      digits_[d] = digits_[d] + 1 == q ? 0 : digits_[d] + 1;
      Apply(d);
      if (digits_[d] != 0) return;
    }
  }

  std::span<const std::uint32_t> digits() const { return digits_; }
  const SystemState& state() const { return state_; }
  const std::vector<UserRandomness>& randomness() const { return randomness_; }

  const std::vector<Query>& queries() {
    if (!queries_valid_) {
      scheme_.MakeQueries(config_.graph, config_.field, theta_, randomness_, queries_);
      queries_valid_ = true;
    }
    return queries_;
  }

  const Answer& answer(VertexId n) {
    if (!answer_valid_[n - 1]) {
      scheme_.Respond(state_.store(n), queries()[n - 1], answers_[n - 1]);
      answer_valid_[n - 1] = 1;
    }
    return answers_[n - 1];
  }

  const std::vector<Answer>& answers() {
    for (VertexId n = 1; n <= answers_.size(); ++n) answer(n);
    return answers_;
  }

  const std::vector<FieldElement>& decoded() {
    scheme_.Reconstruct(answers(), decoded_);
    return decoded_;
  }

 private:
  void Apply(std::size_t d) {
    const Variable& v = vars_[d];
    const FieldElement value = config_.field.Element(digits_[d]);
    switch (v.kind) {
      case VarKind::kMessage:
      case VarKind::kPad: {
        if (v.kind == VarKind::kMessage) {
          state_.SetMessageSymbol(v.k, v.slot, value);
        } else {
          state_.SetPadSymbol(v.k, v.slot, value);
        }
        const auto [i, j] = holders_[d];
        answer_valid_[i - 1] = 0;
        answer_valid_[j - 1] = 0;
        break;
      }
      case VarKind::kRandomness:
        randomness_[v.slot].h[v.k - 1] = value;
        queries_valid_ = false;
        std::fill(answer_valid_.begin(), answer_valid_.end(), 0);
        break;
    }
  }

  const AuditConfig& config_;
  const RetrievalScheme& scheme_;
  MessageId theta_;
  const std::vector<Variable>& vars_;
  std::vector<std::pair<VertexId, VertexId>> holders_;
  SystemState state_;
  std::vector<UserRandomness> randomness_;
  std::vector<std::uint32_t> digits_;
  std::vector<Query> queries_;
  bool queries_valid_ = false;
  std::vector<Answer> answers_;
  std::vector<char> answer_valid_;
  std::vector<FieldElement> decoded_;
};

// Runs `visit(cursor, index, acc)` on every outcome index in [0, total) and
// returns the merged accumulator. Accumulators must merge associatively and
// commutatively so the result does not depend on the thread schedule.
template <typename Acc, typename MakeAcc, typename Visit>
Acc Enumerate(const AuditConfig& config, MessageId theta,
              const std::vector<Variable>& vars, std::uint64_t total,
              MakeAcc make_acc, Visit visit) {
  const RetrievalScheme& scheme = SchemeOf(config);
  if (config.execution == Execution::kReference) {
    Acc acc = make_acc();
    for (std::uint64_t i = 0; i < total; ++i) {
      Cursor cursor(config, scheme, theta, vars);
      cursor.Seek(i);
      visit(cursor, i, acc);
    }
    return acc;
  }

  const int threads = std::max(1, omp_get_max_threads());
  std::vector<Acc> partial;
  partial.reserve(threads);
  for (int t = 0; t < threads; ++t) partial.push_back(make_acc());
  const std::uint64_t chunks =
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 16);
  std::exception_ptr error;
  std::mutex error_mutex;

#pragma omp parallel num_threads(threads)
  {
    Acc& acc = partial[omp_get_thread_num()];
    std::optional<Cursor> cursor;
    try {
      cursor.emplace(config, scheme, theta, vars);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
#pragma omp for schedule(dynamic)
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
      if (!cursor) continue;
      const auto c = static_cast<unsigned __int128>(chunk);
      const auto begin = static_cast<std::uint64_t>(c * total / chunks);
      const auto end = static_cast<std::uint64_t>((c + 1) * total / chunks);
      try {
        cursor->Seek(begin);
        for (std::uint64_t i = begin; i < end; ++i) {
          visit(*cursor, i, acc);
          if (i + 1 < end) cursor->Advance();
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);

  Acc result = std::move(partial[0]);
  for (int t = 1; t < threads; ++t) result.Merge(partial[t]);
  return result;
}

std::vector<std::uint32_t> Values(std::span<const FieldElement> xs) {
  std::vector<std::uint32_t> out;
  out.reserve(xs.size());
  for (const FieldElement& x : xs) out.push_back(x.value());
  return out;
}

std::vector<MessageId> Thetas(const AuditConfig& config) {
  const std::size_t k_count = config.graph.edge_count();
  if (config.theta) {
    if (*config.theta < 1 || *config.theta > k_count) {
      throw std::out_of_range("theta " + std::to_string(*config.theta) +
                              " outside [1, " + std::to_string(k_count) + "]");
    }
    return {*config.theta};
  }
  std::vector<MessageId> all(k_count);
  for (MessageId k = 1; k <= k_count; ++k) all[k - 1] = k;
  return all;
}

std::size_t JointDigits(const AuditConfig& config) {
  const std::size_t k = config.graph.edge_count();
  return k * (2 * config.message_length + config.effective_pad_length());
}

std::size_t ServerViewDigits(const AuditConfig& config, VertexId n) {
  const std::size_t k = config.graph.edge_count();
  const std::size_t d = config.graph.Degree(n);
  return k * config.message_length +
         d * (config.message_length + config.effective_pad_length());
}

struct ReliabilityAcc {
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first;
  Witness witness;

  void Merge(const ReliabilityAcc& other) {
    failures += other.failures;
    if (other.first && (!first || *other.first < *first)) {
      first = other.first;
      witness = other.witness;
    }
  }
};

struct TableAcc {
  ExactDistribution table;
  void Merge(const TableAcc& other) { table.Merge(other.table); }
};

struct TablesAcc {
  std::vector<ExactDistribution> tables;
  void Merge(const TablesAcc& other) {
    for (std::size_t i = 0; i < tables.size(); ++i) tables[i].Merge(other.tables[i]);
  }
};

}  // namespace

std::uint64_t JointOutcomeCount(const AuditConfig& config) {
  return CheckedSize("joint", config.field.modulus(), JointDigits(config),
                     config.budget);
}

std::uint64_t ServerViewOutcomeCount(const AuditConfig& config, VertexId n) {
  return CheckedSize("server " + std::to_string(n) + " view",
                     config.field.modulus(), ServerViewDigits(config, n),
                     config.budget);
}

ExactDistribution EnumerateTranscripts(const AuditConfig& config, MessageId theta) {
  const std::uint64_t total = JointOutcomeCount(config);
  const auto vars = JointVariables(config);
  const Graph& g = config.graph;
  std::size_t arity = vars.size() + g.vertex_count() * config.message_length;
  for (VertexId n = 1; n <= g.vertex_count(); ++n) {
    arity += g.Degree(n) * config.message_length;
  }
  const std::uint32_t q = config.field.modulus();
  auto make = [&] { return TableAcc{ExactDistribution(q, arity)}; };
  auto visit = [&](Cursor& c, std::uint64_t, TableAcc& acc) {
    std::vector<std::uint32_t> outcome(c.digits().begin(), c.digits().end());
    for (const Query& query : c.queries()) {
      for (const FieldElement& x : query.coefficients) outcome.push_back(x.value());
    }
    for (const Answer& a : c.answers()) {
      for (const FieldElement& x : a.symbols) outcome.push_back(x.value());
    }
    acc.table.Add(outcome);
  };
  return Enumerate<TableAcc>(config, theta, vars, total, make, visit).table;
}

ExactDistribution ServerViewDistribution(const AuditConfig& config, VertexId n,
                                         MessageId theta) {
  const std::uint64_t total = ServerViewOutcomeCount(config, n);
  const auto vars = ServerViewVariables(config, n);
  const std::uint32_t q = config.field.modulus();
  const std::size_t l = config.message_length;
  const std::size_t p = config.effective_pad_length();
  const std::size_t degree = config.graph.Degree(n);
  const std::size_t others = config.graph.edge_count() - degree;
  const auto weight = Power(q, others * (l + p));
  if (!weight) throw BudgetExceeded("server view weight", q, others * (l + p), 0);
  const std::size_t arity = degree * l + l + degree * l + degree * p;

  auto make = [&] { return TableAcc{ExactDistribution(q, arity)}; };
  auto visit = [&](Cursor& c, std::uint64_t, TableAcc& acc) {
    std::vector<std::uint32_t> outcome;
    outcome.reserve(arity);
    for (const FieldElement& x : c.queries()[n - 1].coefficients) {
      outcome.push_back(x.value());
    }
    for (const FieldElement& x : c.answer(n).symbols) outcome.push_back(x.value());
    const ServerStore& store = c.state().store(n);
    for (const FieldElement& x : store.message_symbols) outcome.push_back(x.value());
    for (const FieldElement& x : store.pad_symbols) outcome.push_back(x.value());
    acc.table.Add(outcome, *weight);
  };
  return Enumerate<TableAcc>(config, theta, vars, total, make, visit).table;
}

std::vector<CheckRecord> CheckReliability(const AuditConfig& config) {
  const std::uint64_t total = JointOutcomeCount(config);
  const auto vars = JointVariables(config);
  const std::size_t l = config.message_length;
  const std::size_t k_count = config.graph.edge_count();
  const std::size_t p = config.effective_pad_length();

  std::vector<CheckRecord> records;
  for (MessageId theta : Thetas(config)) {
    auto make = [] { return ReliabilityAcc{}; };
    auto visit = [&](Cursor& c, std::uint64_t index, ReliabilityAcc& acc) {
      const auto& decoded = c.decoded();
      const auto digits = c.digits();
      bool ok = decoded.size() == l;
      for (std::size_t t = 0; ok && t < l; ++t) {
        ok = decoded[t].value() == digits[(theta - 1) * l + t];
      }
      if (ok) return;
      ++acc.failures;
      if (acc.first && *acc.first <= index) return;
      acc.first = index;
      std::vector<std::uint32_t> all(digits.begin(), digits.end());
      const auto at = [&](std::size_t from, std::size_t count) {
        return std::vector<std::uint32_t>(all.begin() + from,
                                          all.begin() + from + count);
      };
      acc.witness = Witness{
          {{"messages", at(0, k_count * l)},
           {"pads", at(k_count * l, k_count * p)},
           {"randomness", at(k_count * (l + p), k_count * l)},
           {"decoded", Values(decoded)},
           {"expected", at((theta - 1) * l, l)}},
          {{"outcome_index", index}}};
    };
    const auto acc = Enumerate<ReliabilityAcc>(config, theta, vars, total, make, visit);
    CheckRecord r;
    r.constraint = Constraint::kReliability;
    r.theta = theta;
    r.passed = acc.failures == 0;
    r.outcomes = total;
    if (!r.passed) {
      r.witness = acc.witness;
      r.witness->counts.push_back({"failures", acc.failures});
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<CheckRecord> CheckUserPrivacy(const AuditConfig& config) {
  const Graph& g = config.graph;
  for (VertexId n = 1; n <= g.vertex_count(); ++n) ServerViewOutcomeCount(config, n);

  std::vector<CheckRecord> records;
  const MessageId reference = 1;
  for (VertexId n = 1; n <= g.vertex_count(); ++n) {
    const std::uint64_t total = ServerViewOutcomeCount(config, n);
    const ExactDistribution base = ServerViewDistribution(config, n, reference);
    for (MessageId theta = 1; theta <= g.edge_count(); ++theta) {
      CheckRecord r;
      r.constraint = Constraint::kUserPrivacy;
      r.theta = theta;
      r.reference_theta = reference;
      r.server = n;
      r.outcomes = total;
      if (theta == reference) {
        r.passed = true;
        records.push_back(std::move(r));
        continue;
      }
      const ExactDistribution other = ServerViewDistribution(config, n, theta);
      r.passed = other == base;
      if (!r.passed) {
        std::vector<std::uint64_t> codes = base.SortedSupport();
        const auto more = other.SortedSupport();
        codes.insert(codes.end(), more.begin(), more.end());
        std::sort(codes.begin(), codes.end());
        for (std::uint64_t code : codes) {
          const auto cell = base.Decode(code);
          if (base.Count(cell) != other.Count(cell)) {
            r.witness = Witness{{{"view", cell}},
                                {{"count_theta", other.Count(cell)},
                                 {"count_reference", base.Count(cell)}}};
            break;
          }
        }
      }
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::vector<CheckRecord> CheckDatabasePrivacy(const AuditConfig& config) {
  const std::uint64_t total = JointOutcomeCount(config);
  const auto vars = JointVariables(config);
  const Graph& g = config.graph;
  const std::size_t k_count = g.edge_count();
  const std::size_t l = config.message_length;
  const std::size_t p = config.effective_pad_length();
  const std::uint32_t q = config.field.modulus();
  if (k_count > 20) throw std::invalid_argument("too many messages for subset audit");

  // Answers and queries are packed once per realization; the remaining view
  // components are inputs, read back from the realization index.
  std::size_t shared_digits = g.vertex_count() * l;
  for (VertexId n = 1; n <= g.vertex_count(); ++n) shared_digits += g.Degree(n) * l;
  const auto pow = [q](std::size_t e) {
    std::uint64_t x = 1;
    for (std::size_t i = 0; i < e; ++i) x *= q;
    return x;
  };
  const std::size_t message_digits = k_count * l;
  const std::size_t pad_digits = k_count * p;
  const auto message_digit = [&](MessageId k, std::size_t t) { return (k - 1) * l + t; };
  const auto pad_digit = [&](MessageId k, std::size_t t) {
    return message_digits + (k - 1) * p + t;
  };

  struct NoAcc {
    void Merge(const NoAcc&) {}
  };

  std::vector<CheckRecord> records;
  std::vector<std::uint64_t> shared(total);
  std::vector<std::uint64_t> codes(total);
  for (MessageId theta : Thetas(config)) {
    auto visit = [&](Cursor& c, std::uint64_t index, NoAcc&) {
      std::uint64_t code = 0;
      std::uint64_t scale = 1;
      const auto push = [&](std::uint32_t digit) {
        code += digit * scale;
        scale *= q;
      };
      for (const Answer& a : c.answers()) {
        for (const FieldElement& x : a.symbols) push(x.value());
      }
      for (const Query& query : c.queries()) {
        for (const FieldElement& x : query.coefficients) push(x.value());
      }
      shared[index] = code;
    };
    Enumerate<NoAcc>(config, theta, vars, total, [] { return NoAcc{}; }, visit);

    // Nonempty subsets of [K] \ {theta}, in increasing bitmask order.
    for (std::uint32_t mask = 1; mask < (1u << k_count); ++mask) {
      if (mask & (1u << (theta - 1))) continue;
      std::vector<MessageId> subset;
      for (MessageId k = 1; k <= k_count; ++k) {
        if (mask & (1u << (k - 1))) subset.push_back(k);
      }
      const auto in_j = [&](MessageId k) { return (mask >> (k - 1)) & 1u; };

      // Component order: W_J | answers, queries, R outside J, W outside J and
      // theta, h. weight[d] places input digit d; excluded inputs weigh 0.
      std::vector<std::uint64_t> weight(vars.size(), 0);
      std::size_t position = 0;
      for (MessageId k : subset) {
        for (std::size_t t = 0; t < l; ++t) weight[message_digit(k, t)] = pow(position++);
      }
      const std::size_t arity_a = position;
      position += shared_digits;
      for (MessageId k = 1; k <= k_count; ++k) {
        if (in_j(k)) continue;
        for (std::size_t t = 0; t < p; ++t) weight[pad_digit(k, t)] = pow(position++);
      }
      for (MessageId k = 1; k <= k_count; ++k) {
        if (in_j(k) || k == theta) continue;
        for (std::size_t t = 0; t < l; ++t) weight[message_digit(k, t)] = pow(position++);
      }
      for (std::size_t d = message_digits + pad_digits; d < vars.size(); ++d) {
        weight[d] = pow(position++);
      }
      const std::size_t arity_b = position - arity_a;
      // Throws if the tuple does not fit 64-bit codes, before any weight is used.
      ExactDistribution(q, arity_a + arity_b);
      const std::uint64_t shared_scale = pow(arity_a);

      const std::uint64_t chunks = std::max<std::uint64_t>(
          1, std::min<std::uint64_t>(total, std::uint64_t(omp_get_max_threads()) * 4));
#pragma omp parallel for schedule(static)
      for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
        const auto c = static_cast<unsigned __int128>(chunk);
        const auto begin = static_cast<std::uint64_t>(c * total / chunks);
        const auto end = static_cast<std::uint64_t>((c + 1) * total / chunks);
        std::vector<std::uint32_t> digits(vars.size());
        std::uint64_t inputs = 0;
        std::uint64_t rest = begin;
        for (std::size_t d = 0; d < digits.size(); ++d) {
          digits[d] = static_cast<std::uint32_t>(rest % q);
          rest /= q;
          inputs += digits[d] * weight[d];
        }
        for (std::uint64_t i = begin; i < end; ++i) {
          codes[i] = inputs + shared[i] * shared_scale;
          for (std::size_t d = 0; d < digits.size(); ++d) {
            if (++digits[d] < q) {
              inputs += weight[d];
              break;
            }
            digits[d] = 0;
            inputs -= (q - 1) * weight[d];
          }
        }
      }

      const IndependenceVerdict v = TestIndependenceOfCodes(codes, q, arity_a, arity_b);
      CheckRecord r;
      r.constraint = Constraint::kDatabasePrivacy;
      r.theta = theta;
      r.subset = subset;
      r.passed = v.independent;
      r.outcomes = total;
      if (v.witness) {
        r.witness = Witness{{{"W_J", v.witness->a}, {"view", v.witness->b}},
                            {{"joint_count", v.witness->joint_count},
                             {"count_W_J", v.witness->count_a},
                             {"count_view", v.witness->count_b},
                             {"total", v.witness->total}}};
      }
      records.push_back(std::move(r));
    }
  }
  return records;
}

AuditReport RunAudit(const AuditConfig& config) {
  AuditReport report;
  report.graph = config.graph.name();
  report.q = config.field.modulus();
  report.message_length = config.message_length;
  report.pad_length = config.effective_pad_length();
  report.joint_outcomes_per_theta = JointOutcomeCount(config);
  for (VertexId n = 1; n <= config.graph.vertex_count(); ++n) {
    ServerViewOutcomeCount(config, n);
  }
  for (auto* check : {&CheckReliability, &CheckUserPrivacy, &CheckDatabasePrivacy}) {
    auto records = (*check)(config);
    report.checks.insert(report.checks.end(), std::make_move_iterator(records.begin()),
                         std::make_move_iterator(records.end()));
  }
  return report;
}

}  // namespace graphspir
