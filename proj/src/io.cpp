#include "tokenham/io.hpp"

#include <algorithm>
#include <sstream>

namespace tokenham {

using nlohmann::json;

Labels labels_of(const FanLabeling& labeling) {
  Labels out;
  for (int id = 0; id < labeling.order(); ++id) out[labeling.label(id)] = id;
  return out;
}

json graph_to_json(const Graph& g, const Labels& labels) {
  json j;
  j["order"] = g.order();
  j["edges"] = json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

NamedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
    throw Error("graph json needs \"order\" and \"edges\"");
  std::vector<Graph::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("graph edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  NamedGraph out{Graph(j.at("order").get<int>(), std::move(edges)), {}};
  if (j.contains("labels"))
    for (const auto& [name, id] : j.at("labels").items()) out.labels[name] = id.get<int>();
  return out;
}

std::string to_dot(const Graph& g, const Labels& labels) {
  std::vector<std::string> name(g.order());
  for (const auto& [label, id] : labels)
    if (id >= 0 && id < g.order()) name[id] = label;
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (!name[v].empty()) os << " [label=\"" << name[v] << "\"]";
    os << ";\n";
  }
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

json token_graph_to_json(const TokenGraph& tg, const Labels& base_labels) {
  json j;
  j["k"] = tg.k;
  j["multiset"] = tg.multiset;
  j["order"] = tg.graph.order();
  j["edges"] = json::array();
  for (const auto& [a, b] : tg.graph.edges()) j["edges"].push_back({a, b});
  j["index"] = json::array();
  for (const auto& t : tg.verts) j["index"].push_back(t.elems);
  j["base"] = graph_to_json(tg.base, base_labels);
  return j;
}

LoadedTokenGraph token_graph_from_json(const json& j) {
  LoadedTokenGraph out;
  if (!j.contains("base") || !j.contains("index") || !j.contains("k"))
    throw Error("token graph json needs \"base\", \"k\" and \"index\"");
  auto base = graph_from_json(j.at("base"));
  out.base = std::move(base.graph);
  out.base_labels = std::move(base.labels);
  out.k = j.at("k").get<int>();
  out.multiset = j.value("multiset", false);
  std::vector<Graph::Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  out.graph = Graph(j.at("order").get<int>(), std::move(edges));
  for (const auto& elems : j.at("index"))
    out.verts.push_back(make_token(elems.get<std::vector<int>>(), out.multiset));
  if (static_cast<int>(out.verts.size()) != out.graph.order())
    throw Error("token graph index size does not match order");
  return out;
}

std::map<std::vector<int>, int> LoadedTokenGraph::lookup_map() const {
  std::map<std::vector<int>, int> out;
  for (size_t i = 0; i < verts.size(); ++i) out.emplace(verts[i].elems, static_cast<int>(i));
  return out;
}

namespace {

std::vector<std::string> invert(const Labels& labels, int order) {
  std::vector<std::string> name(order);
  for (const auto& [label, id] : labels)
    if (id >= 0 && id < order) name[id] = label;
  return name;
}

json token_entry(const TokenVertex& t, const std::vector<std::string>& name) {
  json entry = json::array();
  for (int e : t.elems) {
    if (e >= 0 && e < static_cast<int>(name.size()) && !name[e].empty())
      entry.push_back(name[e]);
    else
      entry.push_back(e);
  }
  return entry;
}

int max_elem(const std::vector<TokenVertex>& ts) {
  int hi = -1;
  for (const auto& t : ts)
    for (int e : t.elems) hi = std::max(hi, e);
  return hi;
}

}  // namespace

json result_to_json(const FanHamResult& result, const Labels& labels) {
  json j;
  switch (result.kind) {
    case FanHamResult::Kind::Cycle: {
      const auto& cert = *result.cycle;
      j["kind"] = "cycle";
      j["variant"] = to_string(cert.variant);
      j["m"] = cert.m;
      j["n"] = cert.n;
      auto name = invert(labels, max_elem(cert.cycle) + 1);
      j["cycle"] = json::array();
      for (const auto& t : cert.cycle) j["cycle"].push_back(token_entry(t, name));
      break;
    }
    case FanHamResult::Kind::NotHamiltonian: {
      const auto& cert = *result.cut;
      j["kind"] = "cut";
      j["variant"] = to_string(cert.variant);
      j["m"] = cert.m;
      j["n"] = cert.n;
      auto name = invert(labels, max_elem(cert.removed) + 1);
      j["removed"] = json::array();
      for (const auto& t : cert.removed) j["removed"].push_back(token_entry(t, name));
      j["removed_size"] = cert.removed_size();
      j["component_count"] = cert.component_count;
      break;
    }
    case FanHamResult::Kind::NotHamiltonianSpecial:
      j["kind"] = "special";
      j["reason"] = result.reason;
      break;
  }
  return j;
}

json oracle_to_json(const OracleOutcome& outcome, const std::vector<TokenVertex>* verts,
                    const Labels& labels) {
  json j;
  j["nodes_explored"] = outcome.nodes_explored;
  switch (outcome.kind) {
    case OracleOutcome::Kind::Hamiltonian: {
      j["kind"] = "cycle";
      j["cycle"] = json::array();
      if (verts) {
        auto name = invert(labels, max_elem(*verts) + 1);
        for (int id : outcome.cycle) j["cycle"].push_back(token_entry((*verts)[id], name));
      } else {
        for (int id : outcome.cycle) j["cycle"].push_back(id);
      }
      break;
    }
    case OracleOutcome::Kind::NotHamiltonian:
      j["kind"] = "exhausted-nonham";
      break;
    case OracleOutcome::Kind::BudgetExceeded:
      j["kind"] = "budget-exceeded";
      break;
  }
  return j;
}

TokenVertex token_from_json(const json& entry, const Labels& labels, bool multiset) {
  if (!entry.is_array() || entry.empty()) throw Error("certificate entry must be an array");
  std::vector<int> elems;
  for (const auto& e : entry) {
    if (e.is_number_integer()) {
      elems.push_back(e.get<int>());
    } else if (e.is_string()) {
      auto it = labels.find(e.get<std::string>());
      if (it == labels.end()) throw Error("unknown vertex label \"" + e.get<std::string>() + "\"");
      elems.push_back(it->second);
    } else {
      throw Error("certificate entry element must be an id or a label");
    }
  }
  return make_token(std::move(elems), multiset);
}

std::string format_token(const TokenVertex& t, const Labels& labels) {
  auto name = invert(labels, max_elem({t}) + 1);
  std::string s = "{";
  for (size_t i = 0; i < t.elems.size(); ++i) {
    if (i) s += ',';
    const int e = t.elems[i];
    s += (e < static_cast<int>(name.size()) && !name[e].empty()) ? name[e] : std::to_string(e);
  }
  return s + "}";
}

std::string render_cycle_text(const std::vector<TokenVertex>& cycle, const Labels& labels) {
  auto name = invert(labels, max_elem(cycle) + 1);
  std::string s;
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (i) s += ' ';
    s += '{';
    for (size_t p = 0; p < cycle[i].elems.size(); ++p) {
      if (p) s += ',';
      const int e = cycle[i].elems[p];
      s += (e < static_cast<int>(name.size()) && !name[e].empty()) ? name[e] : std::to_string(e);
    }
    s += '}';
  }
  return s;
}

std::vector<TokenVertex> parse_cycle_text(const std::string& text, const Labels& labels,
                                          bool multiset) {
  std::vector<TokenVertex> out;
  size_t pos = 0;
  while (true) {
    const size_t open = text.find('{', pos);
    if (open == std::string::npos) break;
    const size_t close = text.find('}', open);
    if (close == std::string::npos) throw Error("unbalanced '{' in cycle text");
    std::vector<int> elems;
    std::string item;
    std::istringstream is(text.substr(open + 1, close - open - 1));
    while (std::getline(is, item, ',')) {
      // trim blanks and the paper's v_1 style underscores
      std::erase_if(item, [](char c) { return c == ' ' || c == '_' || c == '\t' || c == '\n'; });
      if (item.empty()) throw Error("empty element in cycle text");
      auto it = labels.find(item);
      if (it != labels.end()) {
        elems.push_back(it->second);
      } else {
        size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw Error("unknown vertex \"" + item + "\" in cycle text");
        elems.push_back(value);
      }
    }
    out.push_back(make_token(std::move(elems), multiset));
    pos = close + 1;
  }
  return out;
}

}  // namespace tokenham
