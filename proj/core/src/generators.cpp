#include "hicm/generators.hpp"

#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "hicm/rng.hpp"

namespace hicm {

Graph generate_ba(NodeId n, NodeId m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw std::invalid_argument("generate_ba: requires 1 <= m < n");
  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  // Endpoint multiset: each entry is one half-edge, so uniform sampling from
  // it is degree-proportional sampling.
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u < m; ++u)
    for (NodeId v = u + 1; v < m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  std::vector<NodeId> picked;
  for (NodeId u = m; u < n; ++u) {
    picked.clear();
    while (picked.size() < m) {
      NodeId target;
      if (endpoints.empty()) {
        // m = 1 starts with a single isolated node; fall back to uniform.
        target = static_cast<NodeId>(rng.next_below(u));
      } else {
        target = endpoints[rng.next_below(endpoints.size())];
      }
      bool dup = false;
      for (NodeId t : picked) dup |= (t == target);
      if (!dup) picked.push_back(target);
    }
    for (NodeId t : picked) {
      edges.emplace_back(t, u);
      endpoints.push_back(t);
      endpoints.push_back(u);
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_er(NodeId n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate_er: p outside [0,1]");
  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph generate_ws(NodeId n, NodeId k, double beta, std::uint64_t seed) {
  if (k % 2 != 0 || k == 0 || k >= n)
    throw std::invalid_argument("generate_ws: requires k even, 0 < k < n");
  if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("generate_ws: beta outside [0,1]");
  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_set<std::uint64_t> present;
  auto key = [](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  for (NodeId u = 0; u < n; ++u)
    for (NodeId j = 1; j <= k / 2; ++j) {
      NodeId v = (u + j) % n;
      edges.emplace_back(u, v);
      present.insert(key(u, v));
    }
  for (auto& [u, v] : edges) {
    if (rng.next_double() >= beta) continue;
    // Rewire the far endpoint; keep the edge if no valid target exists.
    NodeId w;
    bool found = false;
    for (int attempt = 0; attempt < 64; ++attempt) {
      w = static_cast<NodeId>(rng.next_below(n));
      if (w != u && !present.contains(key(u, w))) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    present.erase(key(u, v));
    present.insert(key(u, w));
    v = w;
  }
  return Graph(n, std::move(edges));
}

}  // namespace hicm
