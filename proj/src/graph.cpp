#include "dsdkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "dsdkit/error.hpp"

namespace dsdkit {

std::size_t Graph::min_degree() const {
  std::size_t m = adj_.empty() ? 0 : adj_[0].size();
  for (const auto& list : adj_) m = std::min(m, list.size());
  return m;
}

std::size_t Graph::max_degree() const {
  std::size_t m = 0;
  for (const auto& list : adj_) m = std::max(m, list.size());
  return m;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(v));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) fail(errc::invalid_vertex, "edge endpoint out of range");
  if (has_edge(u, v))
    fail(errc::duplicate_edge, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                   ") inserted twice");
  auto insert_sorted = [](std::vector<std::uint32_t>& list, std::uint32_t x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adj_[u], static_cast<std::uint32_t>(v));
  if (u != v) insert_sorted(adj_[v], static_cast<std::uint32_t>(u));
  volume_ += (u == v) ? 1 : 2;
  ++edge_count_;
}

Graph Graph::from_pairs(std::size_t n,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) fail(errc::invalid_vertex, "edge endpoint out of range");
    g.adj_[u].push_back(v);
    if (u != v) g.adj_[v].push_back(u);
    g.volume_ += (u == v) ? 1 : 2;
    ++g.edge_count_;
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      fail(errc::duplicate_edge, "duplicate edge in bulk construction");
  }
  return g;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count_);
  for (std::uint32_t u = 0; u < size(); ++u)
    for (std::uint32_t v : adj_[u])
      if (v >= u) out.emplace_back(u, v);
  return out;
}

namespace {

long long parse_int_token(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected an integer, got '" +
                                std::string(tok) + "'");
  if (value < 0)
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": negative vertex id");
  return value;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  struct Edge {
    long long u, v;
    std::size_t line;
  };
  std::vector<Edge> edges;
  long long max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;
    if (line[start] == '#') continue;
    line = line.substr(start);

    std::vector<std::string_view> tokens;
    std::size_t tpos = 0;
    while (tpos < line.size()) {
      const std::size_t tend = line.find_first_of(" \t", tpos);
      if (tend == std::string_view::npos) {
        tokens.push_back(line.substr(tpos));
        break;
      }
      if (tend > tpos) tokens.push_back(line.substr(tpos, tend - tpos));
      tpos = line.find_first_not_of(" \t", tend);
      if (tpos == std::string_view::npos) break;
    }
    if (tokens.size() != 2)
      fail(errc::parse_error,
           "line " + std::to_string(line_no) + ": expected 'u v', got " +
               std::to_string(tokens.size()) + " token(s)");

    const long long u = parse_int_token(tokens[0], line_no);
    const long long v = parse_int_token(tokens[1], line_no);
    if (u == v)
      fail(errc::self_loop_in_input,
           "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    edges.push_back({u, v, line_no});
    max_id = std::max({max_id, u, v});
  }

  if (max_id < 0) fail(errc::parse_error, "no edges in input");
  Graph g(static_cast<std::size_t>(max_id) + 1);
  for (const Edge& e : edges) {
    if (g.has_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)))
      fail(errc::duplicate_edge, "line " + std::to_string(e.line) + ": edge (" +
                                     std::to_string(e.u) + ", " + std::to_string(e.v) +
                                     ") appears twice");
    g.add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph path_graph(std::size_t n) {
  if (n < 2) fail(errc::degenerate_graph, "path needs n >= 2");
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(errc::degenerate_graph, "cycle needs n >= 3");
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return g;
}

Graph hypercube_graph(unsigned dim, std::size_t vertex_cap) {
  if (dim < 1) fail(errc::degenerate_graph, "hypercube needs dimension >= 1");
  if (dim >= 8 * sizeof(std::size_t) || (std::size_t(1) << dim) > vertex_cap)
    fail(errc::size_limit, "hypercube dimension " + std::to_string(dim) +
                               " exceeds the vertex cap of " + std::to_string(vertex_cap));
  const std::size_t n = std::size_t(1) << dim;
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (unsigned b = 0; b < dim; ++b) {
      const std::size_t w = v ^ (std::size_t(1) << b);
      if (w > v) g.add_edge(v, w);
    }
  return g;
}

namespace {

// BFS hop distances from source; unreachable stays at -1.
std::vector<int> bfs_levels(const Graph& g, std::size_t source) {
  std::vector<int> level(g.size(), -1);
  std::queue<std::uint32_t> queue;
  level[source] = 0;
  queue.push(static_cast<std::uint32_t>(source));
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop();
    for (std::uint32_t w : g.neighbors(u))
      if (level[w] < 0) {
        level[w] = level[u] + 1;
        queue.push(w);
      }
  }
  return level;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  const auto level = bfs_levels(g, 0);
  for (int l : level)
    if (l < 0) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.size(), -1);
  std::queue<std::uint32_t> queue;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push(static_cast<std::uint32_t>(s));
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop();
      for (std::uint32_t w : g.neighbors(u)) {
        if (w == u) return false;  // loop = odd cycle
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

unsigned graph_distance(const Graph& g, std::size_t u, std::size_t v) {
  if (u >= g.size() || v >= g.size()) fail(errc::invalid_vertex, "vertex out of range");
  const auto level = bfs_levels(g, u);
  if (level[v] < 0)
    fail(errc::disconnected,
         "vertex " + std::to_string(v) + " unreachable from " + std::to_string(u));
  return static_cast<unsigned>(level[v]);
}

unsigned diameter(const Graph& g) {
  unsigned best = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto level = bfs_levels(g, u);
    for (int l : level) {
      if (l < 0) fail(errc::disconnected, "diameter of a disconnected graph");
      best = std::max(best, static_cast<unsigned>(l));
    }
  }
  return best;
}

}  // namespace dsdkit
