#pragma once

#include <string>
#include <vector>

#include "tokenham/graph.hpp"

namespace tokenham {

/// A k-subset (multiset=false) or k-multisubset (multiset=true) of base
/// vertices. elems is sorted ascending, strictly so for subsets.
struct TokenVertex {
  std::vector<int> elems;
  bool multiset = false;

  int k() const { return static_cast<int>(elems.size()); }
  friend bool operator==(const TokenVertex&, const TokenVertex&) = default;
  friend auto operator<=>(const TokenVertex&, const TokenVertex&) = default;
};

/// Sorts elems and checks the sortedness invariant (repeats only when
/// multiset). Throws InvalidPair on a repeated element in a plain subset.
TokenVertex make_token(std::vector<int> elems, bool multiset);

std::string to_string(const TokenVertex& t);  // "{a,b}"

/// Exact C(n,k); 0 when k < 0 or k > n. Throws Error on int64 overflow.
long long binomial(int n, int k);

/// |V(F_k)| = C(n,k) or |V(M_k)| = C(n+k-1,k).
long long token_count(int n, int k, bool multiset);

/// All tokens over base vertices 0..n-1 in colexicographic order.
/// token_rank/token_unrank are mutually inverse against this order.
std::vector<TokenVertex> enumerate_tokens(int n, int k, bool multiset);
long long token_rank(const TokenVertex& t, int n);
TokenVertex token_unrank(long long rank, int n, int k, bool multiset);

/// True iff the multiset symmetric difference of a and b is a pair {u,v}
/// with uv an edge of base ({u,u} vs {u,v} differ exactly in {u,v}).
/// Throws InvalidPair when a and b disagree on k or the multiset flag.
bool adjacent_tokens(const TokenVertex& a, const TokenVertex& b, const Graph& base);

/// Materialized token graph: explicit adjacency over token ids plus the
/// bijection id <-> TokenVertex (ids follow colex order).
struct TokenGraph {
  Graph base;
  int k = 0;
  bool multiset = false;
  Graph graph;
  std::vector<TokenVertex> verts;

  long long index_of(const TokenVertex& t) const;
};

/// F_k(base). Requires 0 < k <= base.order().
TokenGraph token_graph(const Graph& base, int k);
/// M_k(base). Requires 0 < k and base.order() >= 1.
TokenGraph multiset_token_graph(const Graph& base, int k);

}  // namespace tokenham
