#pragma once

// Rate and capacity figures for a replication graph. Values come from the
// known results for this model, never from numerical search:
//
//  * the scheme achieves rate 1/N on every connected graph, with pads as long
//    as messages (and shorter pads make symmetric retrieval infeasible);
//  * for paths and d-regular graphs that rate is the capacity;
//  * reference PIR capacities (no database privacy): 2/N for paths,
//    2/(N+1) for cycles, and at most 2/N for regular graphs.

#include <cstddef>
#include <optional>
#include <string>

#include "graphspir/graph.h"
#include "graphspir/rational.h"

namespace graphspir {

struct CapacityReport {
  std::string graph;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> regular_degree;
  bool is_path = false;
  bool is_cycle = false;
  Rational achievable_rate;
  Rational randomness_ratio;
  // Present iff the capacity is known exactly.
  std::optional<Rational> spir_capacity;
  // Lower bound that always holds.
  Rational spir_lower_bound;
  std::string capacity_note;
  std::optional<Rational> pir_reference;
  std::string pir_note;
  std::optional<Rational> pir_upper_bound;
};

Rational AchievableRate(const Graph& g);
std::optional<Rational> SpirCapacity(const Graph& g);
std::optional<Rational> PirReference(const Graph& g);
// Upper bound on the PIR capacity of regular graphs, 2/N.
std::optional<Rational> PirUpperBound(const Graph& g);

CapacityReport BuildCapacityReport(const Graph& g);

// Measured rate of a run: message symbols over downloaded symbols.
Rational MeasuredRate(std::size_t message_length, std::size_t downloaded_symbols);

}  // namespace graphspir
