#pragma once

// Machine-readable renderings. Key order is fixed so identical inputs give
// byte-identical output.

#include <string>

#include "json.hpp"

#include "graphspir/auditor.h"
#include "graphspir/capacity.h"
#include "graphspir/graph.h"
#include "graphspir/protocol.h"

namespace graphspir {

using Json = nlohmann::ordered_json;

Json ToJson(const Graph& g);
Json ToJson(const RoundTranscript& transcript);
Json ToJson(const CheckRecord& record);
Json ToJson(const AuditReport& report);
Json ToJson(const CapacityReport& report);

std::string ToText(const AuditReport& report);
std::string ToText(const CapacityReport& report);

}  // namespace graphspir
