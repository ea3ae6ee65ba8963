#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsdkit {

// Undirected graph on vertices 0..n-1 with sorted adjacency lists.
// A self-loop (possible only through the random-graph generators, never
// through edge-list input) is stored once in its own list and contributes
// 1 to the vertex degree, so degree == list size and vol == sum of degrees
// hold uniformly. Instances are immutable once built and safe to share
// across threads.
class Graph {
 public:
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t size() const noexcept { return adj_.size(); }

  const std::vector<std::uint32_t>& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::int64_t volume() const noexcept { return volume_; }

  // Loops count once.
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  bool has_edge(std::size_t u, std::size_t v) const;
  bool has_self_loop(std::size_t v) const { return has_edge(v, v); }

  // u == v inserts a loop. Inserting the same pair twice throws
  // errc::duplicate_edge.
  void add_edge(std::size_t u, std::size_t v);

  // Bulk construction: one sort per adjacency list instead of per-edge
  // sorted inserts. Duplicates throw errc::duplicate_edge.
  static Graph from_pairs(std::size_t n,
                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  // All edges as (u, v) with u <= v, lexicographically sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

 private:
  std::vector<std::vector<std::uint32_t>> adj_;
  std::int64_t volume_ = 0;
  std::size_t edge_count_ = 0;
};

// Parses "u v" lines; '#' comments and blank lines are skipped, CRLF is
// accepted. Vertices run 0..max id. Duplicate edges and self-loops are
// rejected (edge-list files describe simple graphs).
Graph from_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// 2^dim vertices indexed by bit pattern, edges between patterns at Hamming
// distance 1. Rejects 2^dim > vertex_cap.
Graph hypercube_graph(unsigned dim, std::size_t vertex_cap = std::size_t(1) << 14);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Shortest-path hop count; throws errc::disconnected if v is unreachable.
unsigned graph_distance(const Graph& g, std::size_t u, std::size_t v);

unsigned diameter(const Graph& g);

}  // namespace dsdkit
