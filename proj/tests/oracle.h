#pragma once

// Test-only reference evaluation of the scheme with plain integers, written
// straight from the closed-form answers:
//
//   A_n = sum_l Ibar(n, l) * (h_l W_l + R_l)  (+ W_theta at the unit holder)
//
// It shares no code with the library's protocol path.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace graphspir::oracle {

struct Instance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-indexed, lower endpoint first
};

inline int Mod(long long x, int q) { return static_cast<int>(((x % q) + q) % q); }

inline int SignOf(const Instance& g, int server, int edge) {
  const auto [u, v] = g.edges[edge];
  if (server == u) return 1;
  if (server == v) return -1;
  return 0;
}

// Single-slot answers for servers 1..N (returned 0-indexed).
inline std::vector<int> Answers(const Instance& g, int q, int theta, int unit_holder,
                                const std::vector<int>& h, const std::vector<int>& w,
                                const std::vector<int>& r, bool with_pads = true) {
  std::vector<int> a(g.n, 0);
  for (int s = 1; s <= g.n; ++s) {
    long long acc = 0;
    for (std::size_t l = 0; l < g.edges.size(); ++l) {
      const int sign = SignOf(g, s, static_cast<int>(l));
      acc += sign * (static_cast<long long>(h[l]) * w[l] + (with_pads ? r[l] : 0));
    }
    if (s == unit_holder) acc += w[theta - 1];
    a[s - 1] = Mod(acc, q);
  }
  return a;
}

// Single-slot queries: server s gets sign(s, l) * h_l for each incident edge
// l in increasing edge order, plus 1 on edge theta at the unit holder.
inline std::vector<std::vector<int>> Queries(const Instance& g, int q, int theta,
                                             int unit_holder, const std::vector<int>& h) {
  std::vector<std::vector<int>> out(g.n);
  for (int s = 1; s <= g.n; ++s) {
    for (std::size_t l = 0; l < g.edges.size(); ++l) {
      const int sign = SignOf(g, s, static_cast<int>(l));
      if (sign == 0) continue;
      long long c = sign * h[l];
      if (s == unit_holder && static_cast<int>(l) + 1 == theta) c += 1;
      out[s - 1].push_back(Mod(c, q));
    }
  }
  return out;
}

// Calls f(values) for every vector in [0, q)^count.
template <typename F>
void ForEachVector(int q, int count, F f) {
  std::vector<int> v(count, 0);
  while (true) {
    f(v);
    int i = 0;
    while (i < count && ++v[i] == q) v[i++] = 0;
    if (i == count) return;
  }
}

// I(X; Y) == 0 on a table of (x, y) -> count, checked cell by cell.
template <typename X, typename Y>
bool Independent(const std::map<std::pair<X, Y>, long long>& joint) {
  std::map<X, long long> px;
  std::map<Y, long long> py;
  long long total = 0;
  for (const auto& [xy, c] : joint) {
    px[xy.first] += c;
    py[xy.second] += c;
    total += c;
  }
  for (const auto& [x, cx] : px) {
    for (const auto& [y, cy] : py) {
      const auto it = joint.find({x, y});
      const long long c = it == joint.end() ? 0 : it->second;
      if (c * total != cx * cy) return false;
    }
  }
  return true;
}

}  // namespace graphspir::oracle
