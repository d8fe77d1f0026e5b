#include "tokenham/graph.hpp"

#include <algorithm>
#include <queue>

namespace tokenham {

namespace {

std::string edge_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Graph::Graph(int order, std::vector<Edge> edge_list) : order_(order) {
  if (order < 0) throw InvalidOrder("graph order must be non-negative");
  for (auto& [a, b] : edge_list) {
    if (a == b) throw InvalidEdge("self-loop " + edge_str(a, b));
    if (a < 0 || b < 0 || a >= order || b >= order)
      throw InvalidEdge("endpoint out of range in " + edge_str(a, b));
    if (a > b) std::swap(a, b);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges_ = std::move(edge_list);

  std::vector<int> deg(order_, 0);
  for (const auto& [a, b] : edges_) {
    ++deg[a];
    ++deg[b];
  }
  offset_.assign(order_ + 1, 0);
  for (int v = 0; v < order_; ++v) offset_[v + 1] = offset_[v] + deg[v];
  adj_.resize(offset_[order_]);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  // scanning the sorted edge list fills each neighbor list already ascending
  for (const auto& [a, b] : edges_) {
    adj_[fill[a]++] = b;
    adj_[fill[b]++] = a;
  }
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= order_) throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
  return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  auto nb = neighbors(u);
  if (v < 0 || v >= order_) throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_graph(int order, const std::vector<Graph::Edge>& edge_list) {
  return Graph(order, edge_list);
}

Graph empty_graph(int n) {
  if (n < 1) throw InvalidOrder("empty_graph: n must be >= 1");
  return Graph(n, {});
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidOrder("path_graph: n must be >= 1");
  std::vector<Graph::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidOrder("cycle_graph: n must be >= 3");
  std::vector<Graph::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidOrder("complete_graph: n must be >= 1");
  std::vector<Graph::Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, std::move(e));
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw InvalidOrder("complete_bipartite: parts must be >= 1");
  return join(empty_graph(m), empty_graph(n));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  std::vector<Graph::Edge> e = g1.edges();
  e.reserve(e.size() + g2.edges().size() +
            static_cast<size_t>(g1.order()) * g2.order());
  for (const auto& [a, b] : g2.edges()) e.emplace_back(a + shift, b + shift);
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) e.emplace_back(u, shift + v);
  return Graph(g1.order() + g2.order(), std::move(e));
}

int FanLabeling::w(int j) const {
  if (j < 1 || j > m) throw InvalidVertex("w index " + std::to_string(j) + " out of [1," + std::to_string(m) + "]");
  return j - 1;
}

int FanLabeling::v(int i) const {
  if (i < 1 || i > n) throw InvalidVertex("v index " + std::to_string(i) + " out of [1," + std::to_string(n) + "]");
  return m + i - 1;
}

std::string FanLabeling::label(int id) const {
  if (id < 0 || id >= m + n) throw InvalidVertex("id " + std::to_string(id) + " out of range");
  return id < m ? "w" + std::to_string(id + 1) : "v" + std::to_string(id - m + 1);
}

Fan fan(int m, int n) {
  if (m < 1 || n < 1) throw InvalidOrder("fan: m and n must be >= 1");
  return Fan{join(empty_graph(m), path_graph(n)), FanLabeling{m, n}};
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.order(), 0);
  for (int v : removed) {
    if (v < 0 || v >= g.order())
      throw InvalidVertex("delete_vertices: id " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (!gone[v]) {
      out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Graph::Edge> e;
  for (const auto& [a, b] : g.edges())
    if (!gone[a] && !gone[b]) e.emplace_back(out.old_to_new[a], out.old_to_new[b]);
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), std::move(e));
  return out;
}

int count_components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return components;
}

}  // namespace tokenham
