#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace hicm {

using NodeId = std::uint32_t;

/// Immutable undirected network over dense node ids 0..node_count()-1.
///
/// Each undirected edge {u, v} owns two directed draw slots: edge i maps
/// u->v to slot 2i and v->u to slot 2i+1. Adjacency entries carry the
/// outgoing slot so the diffusion engine can index coordinated draws
/// without a lookup table.
class Graph {
 public:
  struct Neighbor {
    NodeId node;
    std::uint32_t out_draw;  // draw slot for this_node -> node
  };

  Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges,
        std::vector<std::string> labels = {});

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t directed_edge_count() const { return 2 * edges_.size(); }

  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(NodeId u) const { return adjacency_[u]; }
  std::size_t degree(NodeId u) const { return adjacency_[u].size(); }

  /// Original label of a dense id ("0", "1", ... when constructed without labels).
  const std::string& label(NodeId u) const { return labels_[u]; }

 private:
  NodeId node_count_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::string> labels_;
};

struct LoadSummary {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t comment_lines = 0;
};

/// Parses whitespace-separated edge-list text. Lines starting with '#' or '%'
/// are ignored. Self-loops and duplicate undirected edges are dropped and
/// counted in `summary` (if given). Dense ids follow first-appearance order.
///
/// Throws std::runtime_error on a malformed line (with line number) or on
/// input containing no edges.
Graph load_edge_list(std::istream& in, LoadSummary* summary = nullptr);
Graph load_edge_list(const std::string& text, LoadSummary* summary = nullptr);

/// Writes the canonical edge-list format (one "label label" line per edge).
/// Round-trips through load_edge_list.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace hicm
