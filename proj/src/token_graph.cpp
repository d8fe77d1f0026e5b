#include "tokenham/token_graph.hpp"

#include <algorithm>
#include <limits>

namespace tokenham {

namespace {

// rank of a strictly-increasing subset in colex order: sum of C(a_i, i)
long long subset_rank(std::span<const int> elems) {
  long long r = 0;
  for (size_t i = 0; i < elems.size(); ++i) r += binomial(elems[i], static_cast<int>(i) + 1);
  return r;
}

void check_elems(std::span<const int> elems, int n, bool multiset) {
  if (elems.empty()) throw InvalidK("token must have k >= 1 elements");
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 0 || elems[i] >= n)
      throw InvalidVertex("token element " + std::to_string(elems[i]) + " out of range");
    if (i > 0 && (multiset ? elems[i] < elems[i - 1] : elems[i] <= elems[i - 1]))
      throw InvalidPair("token elements not sorted (or repeated in a plain subset)");
  }
}

long long rank_of_elems(std::span<const int> elems, bool multiset) {
  if (!multiset) return subset_rank(elems);
  // stars-and-bars: b_1<=...<=b_k maps to the subset {b_i + i - 1}
  long long r = 0;
  for (size_t i = 0; i < elems.size(); ++i)
    r += binomial(elems[i] + static_cast<int>(i), static_cast<int>(i) + 1);
  return r;
}

}  // namespace

TokenVertex make_token(std::vector<int> elems, bool multiset) {
  std::sort(elems.begin(), elems.end());
  if (!multiset) {
    auto dup = std::adjacent_find(elems.begin(), elems.end());
    if (dup != elems.end())
      throw InvalidPair("repeated element " + std::to_string(*dup) + " in a plain subset");
  }
  return TokenVertex{std::move(elems), multiset};
}

std::string to_string(const TokenVertex& t) {
  std::string s = "{";
  for (size_t i = 0; i < t.elems.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t.elems[i]);
  }
  return s + "}";
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    __int128 next = static_cast<__int128>(r) * (n - k + i) / i;
    if (next > std::numeric_limits<long long>::max()) throw Error("binomial overflow");
    r = static_cast<long long>(next);
  }
  return r;
}

long long token_count(int n, int k, bool multiset) {
  if (k < 1) throw InvalidK("k must be >= 1");
  if (n < 1) throw InvalidOrder("base order must be >= 1");
  if (!multiset && k > n)
    throw InvalidK("k=" + std::to_string(k) + " exceeds base order " + std::to_string(n));
  return multiset ? binomial(n + k - 1, k) : binomial(n, k);
}

std::vector<TokenVertex> enumerate_tokens(int n, int k, bool multiset) {
  const long long count = token_count(n, k, multiset);
  std::vector<TokenVertex> out;
  out.reserve(static_cast<size_t>(count));
  for (long long r = 0; r < count; ++r) out.push_back(token_unrank(r, n, k, multiset));
  return out;
}

long long token_rank(const TokenVertex& t, int n) {
  check_elems(t.elems, n, t.multiset);
  return rank_of_elems(t.elems, t.multiset);
}

TokenVertex token_unrank(long long rank, int n, int k, bool multiset) {
  const long long count = token_count(n, k, multiset);
  if (rank < 0 || rank >= count) throw Error("token rank " + std::to_string(rank) + " out of range");
  const int universe = multiset ? n + k - 1 : n;
  std::vector<int> elems(k);
  int hi = universe - 1;
  for (int i = k; i >= 1; --i) {
    while (binomial(hi, i) > rank) --hi;
    elems[i - 1] = hi;
    rank -= binomial(hi, i);
  }
  if (multiset)
    for (int i = 0; i < k; ++i) elems[i] -= i;
  return TokenVertex{std::move(elems), multiset};
}

bool adjacent_tokens(const TokenVertex& a, const TokenVertex& b, const Graph& base) {
  if (a.k() != b.k() || a.multiset != b.multiset)
    throw InvalidPair("tokens disagree on k or the multiset flag");
  check_elems(a.elems, base.order(), a.multiset);
  check_elems(b.elems, base.order(), b.multiset);
  // multiset symmetric difference via a two-pointer sweep; bail past 2
  int only_a = -1, only_b = -1, diff = 0;
  size_t i = 0, j = 0;
  const auto record = [&](int elem, bool from_a) {
    ++diff;
    if (diff > 2) return false;
    (from_a ? only_a : only_b) = elem;
    return true;
  };
  while (i < a.elems.size() || j < b.elems.size()) {
    if (j == b.elems.size() || (i < a.elems.size() && a.elems[i] < b.elems[j])) {
      if (!record(a.elems[i++], true)) return false;
    } else if (i == a.elems.size() || b.elems[j] < a.elems[i]) {
      if (!record(b.elems[j++], false)) return false;
    } else {
      ++i;
      ++j;
    }
  }
  return diff == 2 && only_a >= 0 && only_b >= 0 && base.has_edge(only_a, only_b);
}

long long TokenGraph::index_of(const TokenVertex& t) const {
  if (t.k() != k || t.multiset != multiset)
    throw InvalidPair("token does not belong to this token graph");
  return token_rank(t, base.order());
}

namespace {

TokenGraph build_token_graph(const Graph& base, int k, bool multiset) {
  const int n = base.order();
  const long long count = token_count(n, k, multiset);
  if (count > std::numeric_limits<int>::max()) throw Error("token graph too large to materialize");

  TokenGraph tg;
  tg.base = base;
  tg.k = k;
  tg.multiset = multiset;
  tg.verts = enumerate_tokens(n, k, multiset);

  std::vector<Graph::Edge> edges;
  std::vector<int> scratch(static_cast<size_t>(k));
  std::vector<long long> cands;
  for (int id = 0; id < static_cast<int>(count); ++id) {
    const auto& elems = tg.verts[id].elems;
    cands.clear();
    for (int p = 0; p < k; ++p) {
      for (int u : base.neighbors(elems[p])) {
        if (!multiset && std::binary_search(elems.begin(), elems.end(), u)) continue;
        scratch.assign(elems.begin(), elems.end());
        scratch[p] = u;
        std::sort(scratch.begin(), scratch.end());
        cands.push_back(rank_of_elems(scratch, multiset));
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (long long other : cands)
      if (other > id) edges.emplace_back(id, static_cast<int>(other));
  }
  tg.graph = Graph(static_cast<int>(count), std::move(edges));
  return tg;
}

}  // namespace

TokenGraph token_graph(const Graph& base, int k) { return build_token_graph(base, k, false); }

TokenGraph multiset_token_graph(const Graph& base, int k) {
  return build_token_graph(base, k, true);
}

}  // namespace tokenham
