#include "hicm/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hicm {

Graph::Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges,
             std::vector<std::string> labels)
    : node_count_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  adjacency_.resize(node_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u >= node_count_ || v >= node_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in edge set");
    adjacency_[u].push_back({v, static_cast<std::uint32_t>(2 * i)});
    adjacency_[v].push_back({u, static_cast<std::uint32_t>(2 * i + 1)});
  }
  if (labels_.empty()) {
    labels_.reserve(node_count_);
    for (NodeId u = 0; u < node_count_; ++u) labels_.push_back(std::to_string(u));
  }
  if (labels_.size() != node_count_)
    throw std::invalid_argument("label count does not match node count");
}

Graph load_edge_list(std::istream& in, LoadSummary* summary) {
  LoadSummary local;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](const std::string& tok) -> NodeId {
    auto it = ids.find(tok);
    if (it != ids.end()) return it->second;
    NodeId id = static_cast<NodeId>(labels.size());
    ids.emplace(tok, id);
    labels.push_back(tok);
    return id;
  };

  std::string line;
  std::size_t line_no = 0;
  bool saw_any = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') {
      ++local.comment_lines;
      continue;
    }
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw std::runtime_error("malformed edge list line " + std::to_string(line_no) +
                               ": expected exactly two tokens");
    }
    saw_any = true;
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    NodeId lo = std::min(u, v), hi = std::max(u, v);
    std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    if (!seen.insert(key).second) {
      ++local.duplicates_dropped;
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (!saw_any) throw std::runtime_error("empty edge list input");
  if (summary) *summary = local;
  const NodeId n = static_cast<NodeId>(labels.size());
  return Graph(n, std::move(edges), std::move(labels));
}

Graph load_edge_list(const std::string& text, LoadSummary* summary) {
  std::istringstream in(text);
  return load_edge_list(in, summary);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace hicm
