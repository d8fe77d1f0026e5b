#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tokenham/fan_ham.hpp"
#include "tokenham/graph.hpp"
#include "tokenham/oracle.hpp"
#include "tokenham/token_graph.hpp"

namespace tokenham {

/// Optional vertex names, label -> id (e.g. {"w1": 0, "v1": 3}).
using Labels = std::map<std::string, int>;

Labels labels_of(const FanLabeling& labeling);

// ---- graphs ----------------------------------------------------------

/// {"order": int, "edges": [[a,b],...], "labels": {...}} (labels omitted
/// when empty).
nlohmann::json graph_to_json(const Graph& g, const Labels& labels = {});

struct NamedGraph {
  Graph graph;
  Labels labels;  // may be empty
};

NamedGraph graph_from_json(const nlohmann::json& j);

std::string to_dot(const Graph& g, const Labels& labels = {});

// ---- token graphs ----------------------------------------------------

/// Includes the id <-> token index map and the base graph.
nlohmann::json token_graph_to_json(const TokenGraph& tg, const Labels& base_labels = {});

/// Lightweight load for verification: graph + index + base (+labels).
struct LoadedTokenGraph {
  Graph base;
  int k = 0;
  bool multiset = false;
  Graph graph;
  std::vector<TokenVertex> verts;
  Labels base_labels;

  /// token elems -> id, via the file's own index.
  std::map<std::vector<int>, int> lookup_map() const;
};

LoadedTokenGraph token_graph_from_json(const nlohmann::json& j);

// ---- certificates ----------------------------------------------------

/// {"kind":"cycle"|"cut"|"special", "m":int, "n":int, "variant":"F2"|"M2",
///  "cycle":[["w1","v4"],...] | "removed":[...], "component_count":int,
///  "removed_size":int, "reason":str}. Entries use labels when a labeling
/// is supplied, integer ids otherwise.
nlohmann::json result_to_json(const FanHamResult& result, const Labels& labels = {});

/// Serializes an oracle outcome in the same certificate schema
/// (kind "cycle", "exhausted-nonham" or "budget-exceeded"); ids are mapped
/// through `verts` when given.
nlohmann::json oracle_to_json(const OracleOutcome& outcome,
                              const std::vector<TokenVertex>* verts = nullptr,
                              const Labels& labels = {});

/// Token from a certificate entry: an array of labels (strings resolved
/// through `labels`) or of integer ids.
TokenVertex token_from_json(const nlohmann::json& entry, const Labels& labels, bool multiset);

// ---- human-readable cycles -------------------------------------------

std::string format_token(const TokenVertex& t, const Labels& labels = {});

/// "{w1,v4} {w1,v3} ..." — the text form printed by the CLI and diffed by
/// the golden tests.
std::string render_cycle_text(const std::vector<TokenVertex>& cycle, const Labels& labels = {});

/// Parses the text form back into tokens (accepts any element order inside
/// the braces; elements are labels or plain ids).
std::vector<TokenVertex> parse_cycle_text(const std::string& text, const Labels& labels,
                                          bool multiset);

}  // namespace tokenham
