#pragma once

// Replication topology: a simple connected graph whose vertices are servers
// and whose edges are messages. Message k is stored on exactly the two
// endpoints of edge k.
//
// Vertices and messages are 1-indexed throughout the public interface.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphspir {

using VertexId = std::size_t;
using MessageId = std::size_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId lower;
  VertexId upper;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  // Validates and normalizes (lower < upper per edge). Edge order is kept:
  // the position of an edge in `edges` is its message index.
  Graph(std::size_t vertex_count,
        const std::vector<std::pair<VertexId, VertexId>>& edges,
        std::string name = "");

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  const Edge& edge(MessageId k) const;
  // Holders (i, j) of message k with i < j.
  std::pair<VertexId, VertexId> MessageHolders(MessageId k) const;
  std::size_t Degree(VertexId n) const;
  // Messages stored at server n, ascending.
  const std::vector<MessageId>& IncidentMessages(VertexId n) const;
  // +1 if n is the lower endpoint of edge k, -1 if the upper one, else 0.
  int Sign(VertexId n, MessageId k) const;

  std::optional<std::size_t> RegularDegree() const;
  bool IsPath() const;
  bool IsCycle() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void CheckVertex(VertexId n) const;

  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<MessageId>> incident_;
  std::string name_;
};

using IncidenceMatrix = std::vector<std::vector<int>>;

// N x K table of {+1, 0, -1}. Every column holds exactly one +1 (lower
// endpoint) and one -1 (upper endpoint).
class SignedIncidence {
 public:
  explicit SignedIncidence(const Graph& g);

  std::size_t rows() const { return matrix_.size(); }
  std::size_t cols() const { return matrix_.empty() ? 0 : matrix_[0].size(); }
  int at(VertexId n, MessageId k) const { return matrix_.at(n - 1).at(k - 1); }
  const IncidenceMatrix& matrix() const { return matrix_; }

  // Entrywise absolute value, i.e. the unsigned incidence matrix.
  IncidenceMatrix Unsigned() const;
  bool ColumnsCancel() const;

 private:
  IncidenceMatrix matrix_;
};

IncidenceMatrix IncidenceMatrixOf(const Graph& g);

enum class GraphFamily { kPath, kCycle, kStar, kComplete, kRegular };

std::optional<GraphFamily> ParseGraphFamily(const std::string& name);
std::string ToString(GraphFamily family);

// Canonical family members with lexicographically ordered edges. The star's
// hub is vertex N. Regular graphs are circulants: v is joined to v +/- 1, ...,
// v +/- d/2, plus the antipodal vertex when d is odd.
Graph MakePath(std::size_t n);
Graph MakeCycle(std::size_t n);
Graph MakeStar(std::size_t n);
Graph MakeComplete(std::size_t n);
Graph MakeRegular(std::size_t n, std::size_t d);
Graph Generate(GraphFamily family, std::size_t n, std::size_t d = 0);

// Edge-list text format: first line "N K", then K lines "u v". '#' starts a
// comment that runs to end of line; blank lines are skipped.
Graph ParseEdgeList(std::istream& in, std::string name = "");
Graph ParseEdgeList(const std::string& text, std::string name = "");
std::string SerializeEdgeList(const Graph& g);
Graph LoadEdgeListFile(const std::string& path);

}  // namespace graphspir
