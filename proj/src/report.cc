#include "graphspir/report.h"

#include <sstream>

namespace graphspir {

namespace {

Json Symbols(std::span<const FieldElement> xs) {
  Json out = Json::array();
  for (const FieldElement& x : xs) out.push_back(x.value());
  return out;
}

Json OptionalRational(const std::optional<Rational>& r) {
  return r ? Json(r->ToString()) : Json(nullptr);
}

std::string Subset(const std::vector<MessageId>& j) {
  std::string s = "{";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + "}";
}

}  // namespace

Json ToJson(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.lower, e.upper});
  return Json{{"name", g.name()},
              {"n", g.vertex_count()},
              {"k", g.edge_count()},
              {"edges", edges}};
}

Json ToJson(const RoundTranscript& tr) {
  Json h = Json::array();
  for (const UserRandomness& u : tr.randomness) h.push_back(Symbols(u.h));
  Json queries = Json::array();
  for (const Query& q : tr.queries) {
    Json slots = Json::array();
    for (std::size_t t = 0; t < q.slot_count(); ++t) slots.push_back(Symbols(q.slot(t)));
    queries.push_back(slots);
  }
  Json answers = Json::array();
  for (const Answer& a : tr.answers) answers.push_back(Symbols(a.symbols));
  return Json{{"theta", tr.theta},
              {"h", h},
              {"queries", queries},
              {"answers", answers},
              {"decoded", Symbols(tr.decoded)},
              {"downloaded_symbols", tr.downloaded_symbols}};
}

Json ToJson(const CheckRecord& r) {
  Json out{{"constraint", ToString(r.constraint)}, {"theta", r.theta}};
  if (r.reference_theta) out["reference_theta"] = *r.reference_theta;
  if (r.server) out["server"] = *r.server;
  if (r.constraint == Constraint::kDatabasePrivacy) out["subset"] = r.subset;
  out["passed"] = r.passed;
  out["outcomes"] = r.outcomes;
  if (r.witness) {
    Json w = Json::object();
    for (const auto& [name, values] : r.witness->values) w[name] = values;
    for (const auto& [name, count] : r.witness->counts) w[name] = count;
    out["witness"] = w;
  }
  return out;
}

Json ToJson(const AuditReport& report) {
  Json summary = Json::object();
  for (Constraint c : {Constraint::kReliability, Constraint::kUserPrivacy,
                       Constraint::kDatabasePrivacy}) {
    summary[ToString(c)] = report.AllPassed(c) ? "pass" : "fail";
  }
  Json checks = Json::array();
  for (const CheckRecord& r : report.checks) checks.push_back(ToJson(r));
  return Json{{"graph", report.graph},
              {"q", report.q},
              {"L", report.message_length},
              {"pad_length", report.pad_length},
              {"outcomes_per_theta", report.joint_outcomes_per_theta},
              {"summary", summary},
              {"all_passed", report.AllPassed()},
              {"checks", checks}};
}

Json ToJson(const CapacityReport& r) {
  return Json{{"graph", r.graph},
              {"n", r.n},
              {"k", r.k},
              {"regular_degree", r.regular_degree ? Json(*r.regular_degree) : Json(nullptr)},
              {"is_path", r.is_path},
              {"is_cycle", r.is_cycle},
              {"achievable_spir_rate", r.achievable_rate.ToString()},
              {"randomness_ratio", r.randomness_ratio.ToString()},
              {"spir_capacity", OptionalRational(r.spir_capacity)},
              {"spir_lower_bound", r.spir_lower_bound.ToString()},
              {"capacity_note", r.capacity_note},
              {"pir_reference", OptionalRational(r.pir_reference)},
              {"pir_note", r.pir_note},
              {"pir_upper_bound", OptionalRational(r.pir_upper_bound)}};
}

std::string ToText(const AuditReport& report) {
  std::ostringstream out;
  out << "graph " << report.graph << "  q=" << report.q << "  L=" << report.message_length
      << "  pad_length=" << report.pad_length
      << "  outcomes/theta=" << report.joint_outcomes_per_theta << '\n';
  for (Constraint c : {Constraint::kReliability, Constraint::kUserPrivacy,
                       Constraint::kDatabasePrivacy}) {
    out << ToString(c) << ": " << (report.AllPassed(c) ? "PASS" : "FAIL") << " ("
        << report.CountChecks(c) << " checks)\n";
  }
  for (const CheckRecord& r : report.checks) {
    if (r.passed) continue;
    out << "  FAIL " << ToString(r.constraint) << " theta=" << r.theta;
    if (r.server) out << " server=" << *r.server;
    if (!r.subset.empty()) out << " J=" << Subset(r.subset);
    out << '\n';
    if (r.witness) {
      for (const auto& [name, values] : r.witness->values) {
        out << "    " << name << ':';
        for (auto v : values) out << ' ' << v;
        out << '\n';
      }
      for (const auto& [name, count] : r.witness->counts) {
        out << "    " << name << ": " << count << '\n';
      }
    }
  }
  return out.str();
}

std::string ToText(const CapacityReport& r) {
  std::ostringstream out;
  out << "graph " << r.graph << "  N=" << r.n << "  K=" << r.k << '\n'
      << "achievable SPIR rate: " << r.achievable_rate.ToString()
      << " (randomness ratio " << r.randomness_ratio.ToString() << ")\n"
      << "SPIR capacity: "
      << (r.spir_capacity ? r.spir_capacity->ToString() : r.capacity_note) << '\n'
      << "PIR reference: " << (r.pir_reference ? r.pir_reference->ToString() : "none")
      << " (" << r.pir_note << ")\n";
  return out.str();
}

}  // namespace graphspir
