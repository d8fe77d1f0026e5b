#pragma once

#include <string>
#include <vector>

#include "tokenham/graph.hpp"
#include "tokenham/token_graph.hpp"

namespace tokenham {

inline constexpr unsigned long long kDefaultNodeBudget = 100'000'000ULL;

struct OracleOutcome {
  enum class Kind { Hamiltonian, NotHamiltonian, BudgetExceeded };

  Kind kind = Kind::NotHamiltonian;
  std::vector<int> cycle;  // the witness cycle (or path, for hamiltonian_path)
  unsigned long long nodes_explored = 0;

  bool hamiltonian() const { return kind == Kind::Hamiltonian; }
};

/// True iff cycle visits every vertex of g exactly once and consecutive
/// entries (cyclically) are edges. Never throws; when diagnostic is given
/// it receives the first violated condition.
bool verify_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle,
                              std::string* diagnostic = nullptr);

/// Same check on the *implicit* token graph of (base, k, multiset), using
/// the symmetric-difference adjacency rule directly. Avoids materializing
/// the token graph, so it scales to large constructions.
bool verify_token_cycle(const Graph& base, int k, bool multiset,
                        const std::vector<TokenVertex>& cycle,
                        std::string* diagnostic = nullptr);

struct CutCheck {
  bool witnesses_non_hamiltonicity = false;  // component_count > |removed|
  long long component_count = 0;
};

/// Recomputes the components of g - removed from scratch. removed must be
/// a nonempty proper subset of V(g) with valid ids; otherwise InvalidCut.
CutCheck verify_cut_certificate(const Graph& g, const std::vector<int>& removed);

/// Exhaustive Hamiltonian-cycle decision. Backtracking anchored at vertex 0
/// with neighbors in ascending id order (deterministic), pruned by degree,
/// connectivity of the unvisited region, forced-vertex propagation, and a
/// bipartite balance check. NotHamiltonian means the search space was
/// exhausted; running out of budget is reported as BudgetExceeded, never as
/// NotHamiltonian.
OracleOutcome brute_force_hamiltonian(const Graph& g,
                                      unsigned long long node_budget = kDefaultNodeBudget);

/// Spanning-path variant; the witness in `cycle` is a Hamiltonian path.
OracleOutcome hamiltonian_path(const Graph& g,
                               unsigned long long node_budget = kDefaultNodeBudget);

}  // namespace tokenham
