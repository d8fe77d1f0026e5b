#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tokenham/errors.hpp"

namespace tokenham {

/// Simple undirected graph on vertices 0..order-1. The edge set is stored
/// canonically (each pair ascending, pairs sorted, no duplicates) and the
/// graph is immutable after construction, so derived graphs are new values
/// and certificates can reference stable graphs.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  /// Canonicalizes edge_list; duplicate pairs collapse to one edge.
  /// Throws InvalidEdge on self-loops or endpoints outside [0, order).
  Graph(int order, std::vector<Edge> edge_list);

  int order() const { return order_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of v in ascending order. Throws InvalidVertex.
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adj_;     // concatenated neighbor lists
  std::vector<int> offset_;  // offset_[v] .. offset_[v+1] indexes adj_
};

Graph make_graph(int order, const std::vector<Graph::Edge>& edge_list);

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);
/// Parts are [0, m) and [m, m+n).
Graph complete_bipartite(int m, int n);

/// Join g1 + g2: disjoint union plus every cross edge. Vertices of g2 are
/// shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);

/// Vertex naming for the fan graph F_{m,n} = E_m + P_n. The fixed id
/// convention is w_1..w_m -> 0..m-1 and v_1..v_n -> m..m+n-1; indices are
/// 1-based. Everything downstream goes through this map, never raw ids.
struct FanLabeling {
  int m = 0;
  int n = 0;

  int w(int j) const;  // 1 <= j <= m
  int v(int i) const;  // 1 <= i <= n
  int order() const { return m + n; }
  bool is_w(int id) const { return id >= 0 && id < m; }
  std::string label(int id) const;  // "w3" / "v1"
};

struct Fan {
  Graph graph;
  FanLabeling labeling;
};

/// F_{m,n} = join(E_m, P_n) with the labeling above. m >= 1, n >= 1.
Fan fan(int m, int n);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for removed vertices
  std::vector<int> new_to_old;
};

/// Induced subgraph after removing `removed`; ids are remapped and the
/// remap is returned so certificates can be translated between graphs.
InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& removed);

int count_components(const Graph& g);

}  // namespace tokenham
