#include "hicm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hicm {

namespace {

double clustering(const Graph& g) {
  const NodeId n = g.node_count();
  std::uint64_t triples = 0;
  std::uint64_t closed = 0;  // triangles counted once per centre node
  std::vector<char> mark(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    std::uint64_t d = nb.size();
    if (d >= 2) triples += d * (d - 1) / 2;
    for (const auto& a : nb) mark[a.node] = 1;
    for (const auto& a : nb)
      for (const auto& b : g.neighbors(a.node))
        if (b.node > a.node && mark[b.node]) ++closed;
    for (const auto& a : nb) mark[a.node] = 0;
  }
  if (triples == 0) return 0.0;
  // closed = 3 * (triangle count): one hit per centre
  return static_cast<double>(closed) / static_cast<double>(triples);
}

double mean_eigenvector(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<double> x(n, 1.0), y(n, 0.0);
  constexpr double kTol = 1e-9;
  constexpr int kMaxIter = 1000;
  for (int it = 0; it < kMaxIter; ++it) {
    for (NodeId u = 0; u < n; ++u) {
      double s = x[u];  // +I shift keeps bipartite graphs from oscillating
      for (const auto& a : g.neighbors(u)) s += x[a.node];
      y[u] = s;
    }
    double mx = *std::max_element(y.begin(), y.end());
    if (mx <= 0.0) break;
    double diff = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      y[u] /= mx;
      diff = std::max(diff, std::abs(y[u] - x[u]));
    }
    x.swap(y);
    if (diff < kTol) break;
  }
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum / n;
}

}  // namespace

GraphMetrics graph_metrics(const Graph& g) {
  if (g.node_count() < 1) throw std::invalid_argument("graph_metrics: empty graph");
  GraphMetrics m{};
  m.mean_degree = 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
  m.global_clustering = clustering(g);
  m.mean_eigenvector_centrality = mean_eigenvector(g);
  return m;
}

}  // namespace hicm
