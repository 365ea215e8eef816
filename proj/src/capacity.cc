#include "graphspir/capacity.h"

namespace graphspir {

namespace {
std::int64_t Signed(std::size_t x) { return static_cast<std::int64_t>(x); }
}  // namespace

Rational AchievableRate(const Graph& g) { return Rational(1, Signed(g.vertex_count())); }

std::optional<Rational> SpirCapacity(const Graph& g) {
  if (g.IsPath() || g.RegularDegree()) return AchievableRate(g);
  return std::nullopt;
}

std::optional<Rational> PirReference(const Graph& g) {
  const auto n = Signed(g.vertex_count());
  if (g.IsPath()) return Rational(2, n);
  if (g.IsCycle()) return Rational(2, n + 1);
  return std::nullopt;
}

std::optional<Rational> PirUpperBound(const Graph& g) {
  if (g.RegularDegree()) return Rational(2, Signed(g.vertex_count()));
  return std::nullopt;
}

CapacityReport BuildCapacityReport(const Graph& g) {
  CapacityReport r;
  r.graph = g.name();
  r.n = g.vertex_count();
  r.k = g.edge_count();
  r.regular_degree = g.RegularDegree();
  r.is_path = g.IsPath();
  r.is_cycle = g.IsCycle();
  r.achievable_rate = AchievableRate(g);
  r.randomness_ratio = Rational(1);
  r.spir_capacity = SpirCapacity(g);
  r.spir_lower_bound = r.achievable_rate;
  if (r.is_path) {
    r.capacity_note = "path: capacity equals 1/N";
  } else if (r.regular_degree) {
    r.capacity_note = std::to_string(*r.regular_degree) +
                      "-regular: capacity equals 1/N";
  } else {
    r.capacity_note = "unknown, >= " + r.achievable_rate.ToString();
  }
  r.pir_reference = PirReference(g);
  if (r.is_path) {
    r.pir_note = "path PIR capacity 2/N";
  } else if (r.is_cycle) {
    r.pir_note = "cycle PIR capacity 2/(N+1)";
  } else if (r.regular_degree) {
    r.pir_note = "regular graph PIR capacity open in general, at most 2/N";
  } else {
    r.pir_note = "not known";
  }
  r.pir_upper_bound = PirUpperBound(g);
  return r;
}

Rational MeasuredRate(std::size_t message_length, std::size_t downloaded_symbols) {
  return Rational(Signed(message_length), Signed(downloaded_symbols));
}

}  // namespace graphspir
