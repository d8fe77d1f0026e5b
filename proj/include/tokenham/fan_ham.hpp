#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokenham/graph.hpp"
#include "tokenham/token_graph.hpp"

namespace tokenham {

enum class Variant { F2, M2 };

const char* to_string(Variant v);  // "F2" / "M2"

/// An ordered vertex sequence claimed to be a Hamiltonian cycle of the
/// token graph it targets. Constructors in this module only hand one out
/// after it passed the verifier, but verification can always be rerun.
struct HamCycleCert {
  Variant variant = Variant::F2;
  int m = 0;
  int n = 0;
  std::vector<TokenVertex> cycle;
};

/// Non-Hamiltonicity witness: removing `removed` leaves strictly more
/// components than |removed|. component_count is computed by traversal,
/// never asserted from a formula.
struct CutCert {
  Variant variant = Variant::F2;
  int m = 0;
  int n = 0;
  std::vector<TokenVertex> removed;
  long long component_count = 0;

  long long removed_size() const { return static_cast<long long>(removed.size()); }
};

struct FanHamResult {
  enum class Kind { Cycle, NotHamiltonian, NotHamiltonianSpecial };

  Kind kind = Kind::NotHamiltonianSpecial;
  std::optional<HamCycleCert> cycle;  // Kind::Cycle
  std::optional<CutCert> cut;         // Kind::NotHamiltonian
  std::string reason;                 // Kind::NotHamiltonianSpecial

  bool hamiltonian() const { return kind == Kind::Cycle; }
};

/// F_2(F_{m,n}) is Hamiltonian iff (n >= 2 and m <= 2n) or (n = 1 and m = 3).
bool decide_f2_fan(int m, int n);
/// M_2(F_{m,n}) is Hamiltonian iff n >= 2 and m <= 2(n-1).
bool decide_m2_fan(int m, int n);

/// The paths T_i covering F_2(F_{1,n}) restricted to w_1 and the v's:
/// T_i = {v_i,w_1}{v_i,v_{i+1}}...{v_i,v_n}, T_n = {v_n,w_1}. Requires
/// n >= 2 and labeling.n == n. Together they partition V(F_2(F_{1,n})).
std::vector<std::vector<TokenVertex>> f2_t_paths(int n, const FanLabeling& labeling);

/// T'_i = {v_i,w_1}{v_i,v_i}{v_i,v_{i+1}}...{v_i,v_n}; with the extra
/// singleton {{w_1,w_1}} these partition V(M_2(F_{1,n})).
std::vector<std::vector<TokenVertex>> m2_tprime_paths(int n, const FanLabeling& labeling);

/// The vertex-disjoint path family whose concatenation yields the
/// Hamiltonian cycle for (m, n); their union covers the whole token graph.
/// Requires a cycle-producing case: n >= 2 and m within the variant bound.
std::vector<std::vector<TokenVertex>> f2_fan_paths(int m, int n);
std::vector<std::vector<TokenVertex>> m2_fan_paths(int m, int n);

/// Decision + witness for F_2(F_{m,n}): an explicit Hamiltonian cycle in
/// the Hamiltonian range (verifier-gated before return), a cut certificate
/// for n >= 2, m > 2n, and a special reason for n = 1, m != 3. Throws
/// ConstructionInvalid if a built cycle ever fails verification.
FanHamResult f2_fan_cycle(int m, int n);

/// Same for M_2(F_{m,n}); n = 1 is special for every m (a token doubled on
/// an isolated-side vertex has degree 1).
FanHamResult m2_fan_cycle(int m, int n);

/// Corollary lift: relabels the fan construction onto G = g1 + g2 through a
/// Hamiltonian path of g2 (F_{m,n} is a spanning subgraph of G under that
/// relabeling). ham_path is verified; (m, n) must be in range for the
/// chosen variant, else RangeExceeded. The relabeled cycle is re-verified
/// against the token graph of join(g1, g2).
FanHamResult lift_to_join(const Graph& g1, const Graph& g2,
                          const std::vector<int>& ham_path, bool multiset);

}  // namespace tokenham
