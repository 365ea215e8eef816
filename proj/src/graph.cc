#include "graphspir/graph.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace graphspir {

namespace {

std::string EdgeText(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

bool IsConnected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n + 1);
  for (std::size_t i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges) {
    const std::size_t a = find(e.lower);
    const std::size_t b = find(e.upper);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

Graph::Graph(std::size_t vertex_count,
             const std::vector<std::pair<VertexId, VertexId>>& edges,
             std::string name)
    : vertex_count_(vertex_count), name_(std::move(name)) {
  if (vertex_count < 2) {
    throw GraphError("graph needs at least 2 vertices, got " +
                     std::to_string(vertex_count));
  }
  if (edges.empty()) throw GraphError("graph needs at least one edge");
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > vertex_count || v > vertex_count) {
      throw GraphError("edge " + EdgeText(u, v) + " has endpoint outside [1, " +
                       std::to_string(vertex_count) + "]");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) {
      throw GraphError("duplicate edge " + EdgeText(e.lower, e.upper));
    }
    edges_.push_back(e);
  }
  if (!IsConnected(vertex_count, edges_)) throw GraphError("graph is disconnected");

  incident_.resize(vertex_count + 1);
  for (MessageId k = 1; k <= edges_.size(); ++k) {
    incident_[edges_[k - 1].lower].push_back(k);
    incident_[edges_[k - 1].upper].push_back(k);
  }
  if (name_.empty()) {
    name_ = "graph-" + std::to_string(vertex_count) + "-" +
            std::to_string(edges_.size());
  }
}

void Graph::CheckVertex(VertexId n) const {
  if (n < 1 || n > vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(n) + " outside [1, " +
                            std::to_string(vertex_count_) + "]");
  }
}

const Edge& Graph::edge(MessageId k) const {
  if (k < 1 || k > edges_.size()) {
    throw std::out_of_range("message " + std::to_string(k) + " outside [1, " +
                            std::to_string(edges_.size()) + "]");
  }
  return edges_[k - 1];
}

std::pair<VertexId, VertexId> Graph::MessageHolders(MessageId k) const {
  const Edge& e = edge(k);
  return {e.lower, e.upper};
}

std::size_t Graph::Degree(VertexId n) const {
  CheckVertex(n);
  return incident_[n].size();
}

const std::vector<MessageId>& Graph::IncidentMessages(VertexId n) const {
  CheckVertex(n);
  return incident_[n];
}

int Graph::Sign(VertexId n, MessageId k) const {
  CheckVertex(n);
  const Edge& e = edge(k);
  if (e.lower == n) return 1;
  if (e.upper == n) return -1;
  return 0;
}

std::optional<std::size_t> Graph::RegularDegree() const {
  const std::size_t d = incident_[1].size();
  for (VertexId n = 2; n <= vertex_count_; ++n) {
    if (incident_[n].size() != d) return std::nullopt;
  }
  return d;
}

bool Graph::IsPath() const {
  // A connected graph with N-1 edges is a tree; a tree with max degree 2 is a
  // path.
  if (edge_count() != vertex_count_ - 1) return false;
  for (VertexId n = 1; n <= vertex_count_; ++n) {
    if (incident_[n].size() > 2) return false;
  }
  return true;
}

bool Graph::IsCycle() const {
  return vertex_count_ >= 3 && RegularDegree() == std::size_t{2};
}

SignedIncidence::SignedIncidence(const Graph& g)
    : matrix_(g.vertex_count(), std::vector<int>(g.edge_count(), 0)) {
  for (MessageId k = 1; k <= g.edge_count(); ++k) {
    const auto [i, j] = g.MessageHolders(k);
    matrix_[i - 1][k - 1] = 1;
    matrix_[j - 1][k - 1] = -1;
  }
}

IncidenceMatrix SignedIncidence::Unsigned() const {
  IncidenceMatrix out = matrix_;
  for (auto& row : out) {
    for (int& x : row) x = x < 0 ? -x : x;
  }
  return out;
}

bool SignedIncidence::ColumnsCancel() const {
  for (std::size_t c = 0; c < cols(); ++c) {
    int sum = 0;
    int plus = 0;
    int minus = 0;
    for (const auto& row : matrix_) {
      sum += row[c];
      plus += row[c] == 1;
      minus += row[c] == -1;
    }
    if (sum != 0 || plus != 1 || minus != 1) return false;
  }
  return true;
}

IncidenceMatrix IncidenceMatrixOf(const Graph& g) {
  return SignedIncidence(g).Unsigned();
}

std::optional<GraphFamily> ParseGraphFamily(const std::string& name) {
  if (name == "path") return GraphFamily::kPath;
  if (name == "cycle") return GraphFamily::kCycle;
  if (name == "star") return GraphFamily::kStar;
  if (name == "complete") return GraphFamily::kComplete;
  if (name == "regular") return GraphFamily::kRegular;
  return std::nullopt;
}

std::string ToString(GraphFamily family) {
  switch (family) {
    case GraphFamily::kPath: return "path";
    case GraphFamily::kCycle: return "cycle";
    case GraphFamily::kStar: return "star";
    case GraphFamily::kComplete: return "complete";
    case GraphFamily::kRegular: return "regular";
  }
  return "unknown";
}

namespace {

std::vector<std::pair<VertexId, VertexId>> Sorted(std::set<Edge> edges) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.lower, e.upper);
  return out;
}

}  // namespace

Graph MakePath(std::size_t n) {
  if (n < 2) throw GraphError("path needs N >= 2");
  std::set<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.insert({v, v + 1});
  return Graph(n, Sorted(edges), "path-" + std::to_string(n));
}

Graph MakeCycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs N >= 3");
  std::set<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.insert({v, v + 1});
  edges.insert({1, n});
  return Graph(n, Sorted(edges), "cycle-" + std::to_string(n));
}

Graph MakeStar(std::size_t n) {
  if (n < 2) throw GraphError("star needs N >= 2");
  std::set<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.insert({v, n});
  return Graph(n, Sorted(edges), "star-" + std::to_string(n));
}

Graph MakeComplete(std::size_t n) {
  if (n < 2) throw GraphError("complete graph needs N >= 2");
  std::set<Edge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) edges.insert({u, v});
  }
  return Graph(n, Sorted(edges), "complete-" + std::to_string(n));
}

Graph MakeRegular(std::size_t n, std::size_t d) {
  if (n < 2) throw GraphError("regular graph needs N >= 2");
  if (d < 1 || d >= n) {
    throw GraphError("regular graph needs 1 <= d < N, got N=" +
                     std::to_string(n) + " d=" + std::to_string(d));
  }
  if ((n * d) % 2 != 0) {
    throw GraphError("regular graph needs N*d even, got N=" + std::to_string(n) +
                     " d=" + std::to_string(d));
  }
  std::set<Edge> edges;
  auto join = [&](std::size_t a, std::size_t b) {
    // a, b are 0-based circulant positions.
    const VertexId u = a + 1;
    const VertexId v = b + 1;
    edges.insert({std::min(u, v), std::max(u, v)});
  };
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t offset = 1; offset <= d / 2; ++offset) join(v, (v + offset) % n);
    if (d % 2 == 1) join(v, (v + n / 2) % n);
  }
  Graph g(n, Sorted(edges),
          "regular-" + std::to_string(n) + "-" + std::to_string(d));
  if (g.RegularDegree() != d) {
    throw GraphError("no circulant " + std::to_string(d) + "-regular graph on " +
                     std::to_string(n) + " vertices");
  }
  return g;
}

Graph Generate(GraphFamily family, std::size_t n, std::size_t d) {
  switch (family) {
    case GraphFamily::kPath: return MakePath(n);
    case GraphFamily::kCycle: return MakeCycle(n);
    case GraphFamily::kStar: return MakeStar(n);
    case GraphFamily::kComplete: return MakeComplete(n);
    case GraphFamily::kRegular: return MakeRegular(n, d);
  }
  throw GraphError("unknown graph family");
}

Graph ParseEdgeList(std::istream& in, std::string name) {
  std::vector<long long> numbers;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        const long long value = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        numbers.push_back(value);
      } catch (const std::exception&) {
        throw GraphError("edge list line " + std::to_string(line_no) +
                         ": not an integer: '" + token + "'");
      }
    }
  }
  if (numbers.size() < 2) throw GraphError("edge list missing 'N K' header");
  const long long n = numbers[0];
  const long long k = numbers[1];
  if (n < 0 || k < 0) throw GraphError("edge list header has negative counts");
  if (numbers.size() != 2 + 2 * static_cast<std::size_t>(k)) {
    throw GraphError("edge list declares " + std::to_string(k) + " edges but has " +
                     std::to_string(numbers.size() - 2) + " endpoint values");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (long long i = 0; i < k; ++i) {
    const long long u = numbers[2 + 2 * i];
    const long long v = numbers[3 + 2 * i];
    if (u < 1 || v < 1) {
      throw GraphError("edge list endpoint must be positive, got " +
                       std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph(static_cast<std::size_t>(n), edges, std::move(name));
}

Graph ParseEdgeList(const std::string& text, std::string name) {
  std::istringstream in(text);
  return ParseEdgeList(in, std::move(name));
}

std::string SerializeEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.lower << ' ' << e.upper << '\n';
  return out.str();
}

Graph LoadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open edge list file: " + path);
  return ParseEdgeList(in, "edges:" + path);
}

}  // namespace graphspir
