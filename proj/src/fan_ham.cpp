#include "tokenham/fan_ham.hpp"

#include <algorithm>
#include <utility>

#include "tokenham/oracle.hpp"

namespace tokenham {

const char* to_string(Variant v) { return v == Variant::F2 ? "F2" : "M2"; }

namespace {

// Symbolic fan vertices, independent of the id convention: W(j) encodes
// w_j as -j, V(i) encodes v_i as +i (indices 1-based as in the labeling).
constexpr int W(int j) { return -j; }
constexpr int V(int i) { return i; }

// sort key matching the id convention: w_1..w_m before v_1..v_n
constexpr int sym_key(int s) { return s < 0 ? -s : (1 << 24) + s; }

using SymTok = std::pair<int, int>;
using SymPath = std::vector<SymTok>;

SymTok tok(int a, int b) {
  return sym_key(a) <= sym_key(b) ? SymTok{a, b} : SymTok{b, a};
}

bool has_w_above(const SymTok& t, int m) {
  return (t.first < 0 && -t.first > m) || (t.second < 0 && -t.second > m);
}

SymPath reversed(SymPath p) {
  std::reverse(p.begin(), p.end());
  return p;
}

void append(SymPath& dst, const SymPath& src) { dst.insert(dst.end(), src.begin(), src.end()); }

// 1-based residue: mod1(x, M) in [1, M], with mod1(M, M) = M
int mod1(int x, int m) { return (x - 1) % m + 1; }

// T_i = {v_i,w_1}{v_i,v_{i+1}}...{v_i,v_n}; T_n = {v_n,w_1}
std::vector<SymPath> t_paths_sym(int n) {
  std::vector<SymPath> paths(n);
  for (int i = 1; i <= n; ++i) {
    paths[i - 1].push_back(tok(V(i), W(1)));
    for (int j = i + 1; j <= n; ++j) paths[i - 1].push_back(tok(V(i), V(j)));
  }
  return paths;
}

// T'_i = {v_i,w_1}{v_i,v_i}{v_i,v_{i+1}}...{v_i,v_n}
std::vector<SymPath> tprime_paths_sym(int n) {
  std::vector<SymPath> paths(n);
  for (int i = 1; i <= n; ++i) {
    paths[i - 1].push_back(tok(V(i), W(1)));
    for (int j = i; j <= n; ++j) paths[i - 1].push_back(tok(V(i), V(j)));
  }
  return paths;
}

// the base cycle on w_1 and the v's: alternate reversed/forward T_i
// (reversed for odd i), closing {v_n,w_1} -> {v_1,v_n}
SymPath f2_base_cycle(int n) {
  auto paths = t_paths_sym(n);
  SymPath c;
  for (int i = 1; i <= n; ++i) append(c, i % 2 ? reversed(paths[i - 1]) : paths[i - 1]);
  return c;
}

// n even: T'_1 rT'_2 T'_3 ... rT'_n {w_1,w_1}
// n odd:  rT'_1 {w_1,w_1} T'_2 rT'_3 ... rT'_n
SymPath m2_base_cycle(int n) {
  auto paths = tprime_paths_sym(n);
  SymPath c;
  if (n % 2 == 0) {
    for (int i = 1; i <= n; ++i) append(c, i % 2 ? paths[i - 1] : reversed(paths[i - 1]));
    c.push_back(tok(W(1), W(1)));
  } else {
    append(c, reversed(paths[0]));
    c.push_back(tok(W(1), W(1)));
    for (int i = 2; i <= n; ++i) append(c, i % 2 ? reversed(paths[i - 1]) : paths[i - 1]);
  }
  return c;
}

// P_i of the full F2 case (all indices live mod M = 2n): starts
// {w_i,v_n}, then {w_i,w_1} (i <= n) or {w_i,w_{i+n}} (i > n), then the
// pattern {w_i,v_j}{w_i,w_{i+j}} from j = n-1 down to 1.
SymPath f2_p_sym(int i, int n) {
  const int M = 2 * n;
  SymPath p;
  p.push_back(tok(W(i), V(n)));
  p.push_back(tok(W(i), W(i <= n ? 1 : mod1(i + n, M))));
  for (int j = n - 1; j >= 1; --j) {
    p.push_back(tok(W(i), V(j)));
    p.push_back(tok(W(i), W(mod1(i + j, M))));
  }
  return p;
}

// P_i of the full M2 case (indices mod M = 2(n-1)): starts
// {w_i,v_n}{w_i,w_i}; for i <= n-1 continues {w_i,v_{n-1}}{w_i,w_1} and the
// pattern from j = n-2, for i >= n the pattern runs from j = n-1.
SymPath m2_p_sym(int i, int n) {
  const int M = 2 * (n - 1);
  SymPath p;
  p.push_back(tok(W(i), V(n)));
  p.push_back(tok(W(i), W(i)));
  int first_j = n - 1;
  if (i <= n - 1) {
    p.push_back(tok(W(i), V(n - 1)));
    p.push_back(tok(W(i), W(1)));
    first_j = n - 2;
  }
  for (int j = first_j; j >= 1; --j) {
    p.push_back(tok(W(i), V(j)));
    p.push_back(tok(W(i), W(mod1(i + j, M))));
  }
  return p;
}

// the 1 < m < M modification: interchange {w_m,w_{m+1}} and {w_m,w_1}
// (last path only), then delete every {w_i,w_j} with j > m
SymPath prune_p(SymPath p, int i, int m, bool is_last) {
  if (is_last) {
    auto a = std::find(p.begin(), p.end(), tok(W(i), W(m + 1)));
    auto b = std::find(p.begin(), p.end(), tok(W(i), W(1)));
    if (a == p.end() || b == p.end())
      throw ConstructionInvalid("interchange vertices missing from P_" + std::to_string(i));
    std::iter_swap(a, b);
  }
  std::erase_if(p, [m](const SymTok& t) { return has_w_above(t, m); });
  return p;
}

struct Plan {
  std::vector<SymPath> paths;  // vertex-disjoint family covering the token graph
  SymPath cycle;
};

// F2, n >= 2, 1 <= m <= 2n
Plan f2_plan(int m, int n) {
  Plan plan;
  if (m == 1) {
    plan.paths = t_paths_sym(n);
    plan.cycle = f2_base_cycle(n);
    return plan;
  }
  const int M = 2 * n;
  plan.paths.push_back(reversed(f2_base_cycle(n)));  // P_1: {v_n,w_1} ... {v_1,v_n}
  for (int i = 2; i <= m; ++i) {
    auto p = f2_p_sym(i, n);
    if (m < M) p = prune_p(std::move(p), i, m, i == m);
    plan.paths.push_back(std::move(p));
  }
  for (const auto& p : plan.paths) append(plan.cycle, p);
  return plan;
}

// M2, n >= 2, 1 <= m <= 2(n-1)
Plan m2_plan(int m, int n) {
  Plan plan;
  if (m == 1) {
    plan.paths = tprime_paths_sym(n);
    plan.paths.push_back({tok(W(1), W(1))});
    plan.cycle = m2_base_cycle(n);
    return plan;
  }
  const int M = 2 * (n - 1);
  // P_1: the base cycle cut between {v_n,w_1} and its predecessor {v_n,v_n}
  auto base = m2_base_cycle(n);
  auto at = std::find(base.begin(), base.end(), tok(V(n), W(1)));
  if (at == base.end() || *(at == base.begin() ? base.end() - 1 : at - 1) != tok(V(n), V(n)))
    throw ConstructionInvalid("base cycle does not pass {v_n,v_n}{v_n,w_1}");
  SymPath p1(at, base.end());
  p1.insert(p1.end(), base.begin(), at);
  plan.paths.push_back(std::move(p1));
  for (int i = 2; i <= m; ++i) {
    auto p = m2_p_sym(i, n);
    if (m < M) p = prune_p(std::move(p), i, m, i == m);
    plan.paths.push_back(std::move(p));
  }
  for (const auto& p : plan.paths) append(plan.cycle, p);
  return plan;
}

int sym_id(int s, const FanLabeling& lab) { return s < 0 ? lab.w(-s) : lab.v(s); }

TokenVertex sym_token(const SymTok& t, const FanLabeling& lab, bool multiset) {
  return make_token({sym_id(t.first, lab), sym_id(t.second, lab)}, multiset);
}

std::vector<TokenVertex> materialize(const SymPath& p, const FanLabeling& lab, bool multiset) {
  std::vector<TokenVertex> out;
  out.reserve(p.size());
  for (const auto& t : p) out.push_back(sym_token(t, lab, multiset));
  return out;
}

std::vector<std::vector<TokenVertex>> materialize_all(const std::vector<SymPath>& paths,
                                                      const FanLabeling& lab, bool multiset) {
  std::vector<std::vector<TokenVertex>> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(materialize(p, lab, multiset));
  return out;
}

FanHamResult cycle_result(Variant variant, int m, int n, std::vector<TokenVertex> cycle,
                          const Graph& base) {
  std::string diag;
  if (!verify_token_cycle(base, 2, variant == Variant::M2, cycle, &diag))
    throw ConstructionInvalid("constructed cycle for " + std::string(to_string(variant)) + "(F_{" +
                              std::to_string(m) + "," + std::to_string(n) +
                              "}) failed verification: " + diag);
  FanHamResult res;
  res.kind = FanHamResult::Kind::Cycle;
  res.cycle = HamCycleCert{variant, m, n, std::move(cycle)};
  return res;
}

// removal set A = { {w_i, v_j} : i in [m], j in [n] }; the component count
// of the reduced graph is recomputed by traversal
FanHamResult cut_result(Variant variant, int m, int n) {
  const bool multiset = variant == Variant::M2;
  const Fan f = fan(m, n);
  const TokenGraph tg =
      multiset ? multiset_token_graph(f.graph, 2) : token_graph(f.graph, 2);
  std::vector<TokenVertex> removed;
  std::vector<int> removed_ids;
  removed.reserve(static_cast<size_t>(m) * n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto t = make_token({f.labeling.w(i), f.labeling.v(j)}, multiset);
      removed_ids.push_back(static_cast<int>(tg.index_of(t)));
      removed.push_back(std::move(t));
    }
  }
  const CutCheck check = verify_cut_certificate(tg.graph, removed_ids);
  if (!check.witnesses_non_hamiltonicity)
    throw ConstructionInvalid("cut certificate for " + std::string(to_string(variant)) +
                              " fan(" + std::to_string(m) + "," + std::to_string(n) +
                              ") does not witness non-Hamiltonicity");
  FanHamResult res;
  res.kind = FanHamResult::Kind::NotHamiltonian;
  res.cut = CutCert{variant, m, n, std::move(removed), check.component_count};
  return res;
}

FanHamResult special_result(std::string reason) {
  FanHamResult res;
  res.kind = FanHamResult::Kind::NotHamiltonianSpecial;
  res.reason = std::move(reason);
  return res;
}

void require_fan_params(int m, int n) {
  if (m < 1 || n < 1) throw InvalidOrder("fan parameters must satisfy m >= 1, n >= 1");
}

}  // namespace

bool decide_f2_fan(int m, int n) {
  require_fan_params(m, n);
  return (n >= 2 && m <= 2 * n) || (n == 1 && m == 3);
}

bool decide_m2_fan(int m, int n) {
  require_fan_params(m, n);
  return n >= 2 && m <= 2 * (n - 1);
}

std::vector<std::vector<TokenVertex>> f2_t_paths(int n, const FanLabeling& labeling) {
  if (n < 2) throw InvalidOrder("T paths need n >= 2");
  if (labeling.n != n || labeling.m < 1) throw InvalidOrder("labeling does not match n");
  return materialize_all(t_paths_sym(n), labeling, false);
}

std::vector<std::vector<TokenVertex>> m2_tprime_paths(int n, const FanLabeling& labeling) {
  if (n < 2) throw InvalidOrder("T' paths need n >= 2");
  if (labeling.n != n || labeling.m < 1) throw InvalidOrder("labeling does not match n");
  return materialize_all(tprime_paths_sym(n), labeling, true);
}

std::vector<std::vector<TokenVertex>> f2_fan_paths(int m, int n) {
  require_fan_params(m, n);
  if (n < 2 || m > 2 * n) throw RangeExceeded("no path family outside the Hamiltonian range");
  return materialize_all(f2_plan(m, n).paths, FanLabeling{m, n}, false);
}

std::vector<std::vector<TokenVertex>> m2_fan_paths(int m, int n) {
  require_fan_params(m, n);
  if (n < 2 || m > 2 * (n - 1))
    throw RangeExceeded("no path family outside the Hamiltonian range");
  return materialize_all(m2_plan(m, n).paths, FanLabeling{m, n}, true);
}

FanHamResult f2_fan_cycle(int m, int n) {
  require_fan_params(m, n);
  if (n == 1) {
    if (m != 3)
      return special_result("F_2 of the star F_{" + std::to_string(m) +
                            ",1} = K_{1," + std::to_string(m) + "} is Hamiltonian only for m=3");
    // the 6-cycle of F_2(K_{1,3}); found exhaustively, then gated like the rest
    const Fan f = fan(3, 1);
    const TokenGraph tg = token_graph(f.graph, 2);
    const OracleOutcome found = brute_force_hamiltonian(tg.graph);
    if (!found.hamiltonian())
      throw ConstructionInvalid("exhaustive search failed to recover the F_2(K_{1,3}) 6-cycle");
    std::vector<TokenVertex> cycle;
    cycle.reserve(found.cycle.size());
    for (int id : found.cycle) cycle.push_back(tg.verts[id]);
    return cycle_result(Variant::F2, m, n, std::move(cycle), f.graph);
  }
  if (m > 2 * n) return cut_result(Variant::F2, m, n);
  const FanLabeling lab{m, n};
  return cycle_result(Variant::F2, m, n, materialize(f2_plan(m, n).cycle, lab, false),
                      fan(m, n).graph);
}

FanHamResult m2_fan_cycle(int m, int n) {
  require_fan_params(m, n);
  if (n == 1)
    return special_result("vertex {w_i,w_i} has degree 1");
  if (m > 2 * (n - 1)) return cut_result(Variant::M2, m, n);
  const FanLabeling lab{m, n};
  return cycle_result(Variant::M2, m, n, materialize(m2_plan(m, n).cycle, lab, true),
                      fan(m, n).graph);
}

FanHamResult lift_to_join(const Graph& g1, const Graph& g2, const std::vector<int>& ham_path,
                          bool multiset) {
  const int m = g1.order();
  const int n = g2.order();
  if (m < 1 || n < 2) throw RangeExceeded("join lift needs |G1| >= 1 and |G2| >= 2");
  if (static_cast<int>(ham_path.size()) != n)
    throw InvalidHamPath("path visits " + std::to_string(ham_path.size()) + " of " +
                         std::to_string(n) + " vertices");
  std::vector<char> seen(n, 0);
  for (int v : ham_path) {
    if (v < 0 || v >= n) throw InvalidHamPath("path vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw InvalidHamPath("path repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
  for (size_t i = 0; i + 1 < ham_path.size(); ++i)
    if (!g2.has_edge(ham_path[i], ham_path[i + 1]))
      throw InvalidHamPath("path step " + std::to_string(ham_path[i]) + "-" +
                           std::to_string(ham_path[i + 1]) + " is not an edge of G2");
  if (multiset ? m > 2 * (n - 1) : m > 2 * n)
    throw RangeExceeded("m = " + std::to_string(m) + " exceeds the bound for |G2| = " +
                        std::to_string(n));

  FanHamResult fan_res = multiset ? m2_fan_cycle(m, n) : f2_fan_cycle(m, n);
  if (!fan_res.cycle)
    throw ConstructionInvalid("fan construction produced no cycle inside the theorem range");
  // v_i -> i-th vertex of the Hamiltonian path (shifted), w_j -> j-th of G1;
  // this maps F_{m,n} onto a spanning subgraph of G1 + G2
  const auto relabel = [&](int id) { return id < m ? id : m + ham_path[id - m]; };
  std::vector<TokenVertex> cycle;
  cycle.reserve(fan_res.cycle->cycle.size());
  for (const auto& t : fan_res.cycle->cycle)
    cycle.push_back(make_token({relabel(t.elems[0]), relabel(t.elems[1])}, multiset));
  return cycle_result(multiset ? Variant::M2 : Variant::F2, m, n, std::move(cycle),
                      join(g1, g2));
}

}  // namespace tokenham
