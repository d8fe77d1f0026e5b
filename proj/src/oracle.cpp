#include "tokenham/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace tokenham {

bool verify_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle,
                              std::string* diagnostic) {
  const auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  if (static_cast<int>(cycle.size()) != g.order())
    return fail("cycle length " + std::to_string(cycle.size()) + " != graph order " +
                std::to_string(g.order()));
  if (cycle.size() < 3) return fail("a cycle needs at least 3 vertices");
  std::vector<char> seen(g.order(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= g.order()) return fail("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) return fail("vertex " + std::to_string(v) + " visited twice");
    seen[v] = 1;
  }
  for (size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    if (!g.has_edge(a, b))
      return fail("consecutive vertices " + std::to_string(a) + " and " + std::to_string(b) +
                  " (position " + std::to_string(i) + ") are not adjacent");
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

bool verify_token_cycle(const Graph& base, int k, bool multiset,
                        const std::vector<TokenVertex>& cycle, std::string* diagnostic) {
  const auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  try {
    const long long expected = token_count(base.order(), k, multiset);
    if (static_cast<long long>(cycle.size()) != expected)
      return fail("cycle length " + std::to_string(cycle.size()) + " != token graph order " +
                  std::to_string(expected));
    if (cycle.size() < 3) return fail("a cycle needs at least 3 vertices");
    std::vector<long long> ranks;
    ranks.reserve(cycle.size());
    for (const auto& t : cycle) {
      if (t.k() != k || t.multiset != multiset)
        return fail("token " + to_string(t) + " does not belong to this token graph");
      ranks.push_back(token_rank(t, base.order()));
    }
    auto sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      auto pos = std::find(ranks.begin(), ranks.end(), *dup) - ranks.begin();
      return fail("token " + to_string(cycle[pos]) + " visited twice");
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
      const auto& a = cycle[i];
      const auto& b = cycle[(i + 1) % cycle.size()];
      if (!adjacent_tokens(a, b, base))
        return fail("consecutive tokens " + to_string(a) + " and " + to_string(b) +
                    " (position " + std::to_string(i) + ") are not adjacent");
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

CutCheck verify_cut_certificate(const Graph& g, const std::vector<int>& removed) {
  if (removed.empty()) throw InvalidCut("removal set is empty");
  std::vector<int> unique_removed = removed;
  std::sort(unique_removed.begin(), unique_removed.end());
  unique_removed.erase(std::unique(unique_removed.begin(), unique_removed.end()),
                       unique_removed.end());
  if (unique_removed.size() != removed.size()) throw InvalidCut("removal set repeats a vertex");
  if (unique_removed.front() < 0 || unique_removed.back() >= g.order())
    throw InvalidCut("removal set contains an out-of-range vertex");
  if (static_cast<int>(unique_removed.size()) >= g.order())
    throw InvalidCut("removal set must be a proper subset of the vertices");
  const auto reduced = delete_vertices(g, unique_removed);
  const long long components = count_components(reduced.graph);
  return CutCheck{components > static_cast<long long>(unique_removed.size()), components};
}

namespace {

// Hamiltonian-cycle backtracking over an adjacency view, anchored at
// vertex 0, neighbors in ascending order.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, unsigned long long budget) : g_(g), n_(g.order()), budget_(budget) {}

  OracleOutcome run() {
    OracleOutcome out;
    if (n_ < 3) {
      out.kind = OracleOutcome::Kind::NotHamiltonian;
      return out;
    }
    for (int v = 0; v < n_; ++v) {
      if (g_.degree(v) < 2) {
        out.kind = OracleOutcome::Kind::NotHamiltonian;
        return out;
      }
    }
    if (count_components(g_) != 1) {
      out.kind = OracleOutcome::Kind::NotHamiltonian;
      return out;
    }
    if (unbalanced_bipartite()) {
      // a Hamiltonian cycle alternates sides of any proper 2-coloring
      out.kind = OracleOutcome::Kind::NotHamiltonian;
      return out;
    }
    return search();
  }

 private:
  bool unbalanced_bipartite() const {
    std::vector<int> color(n_, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    int counts[2] = {1, 0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g_.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          ++counts[color[u]];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;  // odd cycle
        }
      }
    }
    return counts[0] != counts[1];
  }

  // Every unvisited vertex must be reachable from `endpoint` through
  // unvisited vertices only, and must keep at least two usable contacts.
  bool feasible(int endpoint) {
    const int remaining = n_ - static_cast<int>(path_.size());
    if (remaining == 0) return true;
    // reachability
    bfs_.clear();
    bfs_.push_back(endpoint);
    stamp_++;
    mark_[endpoint] = stamp_;
    int reached = 0;
    for (size_t head = 0; head < bfs_.size(); ++head) {
      for (int u : g_.neighbors(bfs_[head])) {
        if (!visited_[u] && mark_[u] != stamp_) {
          mark_[u] = stamp_;
          bfs_.push_back(u);
          ++reached;
        }
      }
    }
    if (reached != remaining) return false;
    // the closing vertex must still be reachable from the unvisited region
    const int start = path_.front();
    bool start_touches = false;
    for (int u : g_.neighbors(start)) {
      if (!visited_[u]) {
        start_touches = true;
        break;
      }
    }
    if (!start_touches) return false;
    // degree filter: usable contacts are unvisited vertices, the current
    // endpoint, and the closing vertex
    for (size_t head = 0; head < bfs_.size(); ++head) {
      int u = bfs_[head];
      if (u == endpoint) continue;
      int contacts = 0;
      for (int x : g_.neighbors(u)) {
        if (!visited_[x] || x == endpoint || x == start) {
          if (++contacts >= 2) break;
        }
      }
      if (contacts < 2) return false;
    }
    return true;
  }

  // Candidate continuations from `endpoint`. A neighbor whose remaining
  // usable degree would drop below 2 if skipped must be taken now.
  void order_candidates(int endpoint, std::vector<int>& out) {
    out.clear();
    const int start = path_.front();
    scratch_.clear();
    bool any_forced = false;
    for (int u : g_.neighbors(endpoint)) {
      if (visited_[u]) continue;
      int future = 0;
      for (int x : g_.neighbors(u)) {
        if ((!visited_[x] && x != u) || x == start) {
          if (++future >= 2) break;
        }
      }
      const bool forced = future < 2;
      any_forced |= forced;
      scratch_.push_back(forced ? ~u : u);
    }
    for (int enc : scratch_) {
      const bool forced = enc < 0;
      if (!any_forced || forced) out.push_back(forced ? ~enc : enc);
    }
  }

  OracleOutcome search() {
    visited_.assign(n_, 0);
    mark_.assign(n_, 0);
    path_.clear();
    path_.push_back(0);
    visited_[0] = 1;

    std::vector<std::vector<int>> cands(1);
    std::vector<size_t> next{0};
    order_candidates(0, cands[0]);

    OracleOutcome out;
    while (!cands.empty()) {
      const size_t depth = cands.size() - 1;
      if (next[depth] >= cands[depth].size()) {
        cands.pop_back();
        next.pop_back();
        if (!cands.empty()) {
          visited_[path_.back()] = 0;
          path_.pop_back();
        }
        continue;
      }
      const int v = cands[depth][next[depth]++];
      if (++out.nodes_explored > budget_) {
        out.kind = OracleOutcome::Kind::BudgetExceeded;
        return out;
      }
      visited_[v] = 1;
      path_.push_back(v);
      if (static_cast<int>(path_.size()) == n_) {
        if (g_.has_edge(v, path_.front())) {
          out.kind = OracleOutcome::Kind::Hamiltonian;
          out.cycle = path_;
          return out;
        }
        visited_[v] = 0;
        path_.pop_back();
        continue;
      }
      if (feasible(v)) {
        cands.emplace_back();
        next.push_back(0);
        order_candidates(v, cands.back());
      } else {
        visited_[v] = 0;
        path_.pop_back();
      }
    }
    out.kind = OracleOutcome::Kind::NotHamiltonian;
    return out;
  }

  const Graph& g_;
  int n_;
  unsigned long long budget_;
  std::vector<char> visited_;
  std::vector<int> path_;
  std::vector<int> bfs_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<int> scratch_;
};

}  // namespace

OracleOutcome brute_force_hamiltonian(const Graph& g, unsigned long long node_budget) {
  return CycleSearch(g, node_budget).run();
}

OracleOutcome hamiltonian_path(const Graph& g, unsigned long long node_budget) {
  OracleOutcome out;
  if (g.order() == 0) {
    out.kind = OracleOutcome::Kind::NotHamiltonian;
    return out;
  }
  if (g.order() == 1) {
    out.kind = OracleOutcome::Kind::Hamiltonian;
    out.cycle = {0};
    return out;
  }
  if (g.order() == 2) {
    out.kind = g.has_edge(0, 1) ? OracleOutcome::Kind::Hamiltonian
                                : OracleOutcome::Kind::NotHamiltonian;
    if (out.hamiltonian()) out.cycle = {0, 1};
    return out;
  }
  // spanning path in g == Hamiltonian cycle in g plus a universal vertex
  const int hub = g.order();
  std::vector<Graph::Edge> edges = g.edges();
  for (int v = 0; v < g.order(); ++v) edges.emplace_back(v, hub);
  const Graph augmented(g.order() + 1, std::move(edges));
  OracleOutcome inner = brute_force_hamiltonian(augmented, node_budget);
  out.kind = inner.kind;
  out.nodes_explored = inner.nodes_explored;
  if (inner.hamiltonian()) {
    auto at = std::find(inner.cycle.begin(), inner.cycle.end(), hub);
    std::vector<int> path(at + 1, inner.cycle.end());
    path.insert(path.end(), inner.cycle.begin(), at);
    out.cycle = std::move(path);
  }
  return out;
}

}  // namespace tokenham
