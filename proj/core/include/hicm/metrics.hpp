#pragma once

#include "hicm/graph.hpp"

namespace hicm {

struct GraphMetrics {
  double mean_degree;               // 2|E| / |V|
  double global_clustering;         // 3*triangles / connected triples, 0 if no triples
  double mean_eigenvector_centrality;  // power iteration, max component = 1
};

/// Descriptive metrics. Eigenvector centrality uses shifted power iteration
/// (A + I) with unit-max normalization, tolerance 1e-9, at most 1000
/// iterations; disconnected graphs are handled as-is (dominant eigenvector).
GraphMetrics graph_metrics(const Graph& g);

}  // namespace hicm
