#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctc/nodeset.hpp"

namespace ctc {

/// Simple directed graph on nodes 0..n-1, n >= 2. Self-loops are never
/// stored; every node implicitly hears itself, so the *_closed neighborhood
/// queries always include the node itself.
class DiGraph {
 public:
  DiGraph(int n, const std::vector<std::pair<NodeId, NodeId>>& edges);

  static DiGraph complete(int n);
  static DiGraph cycle(int n);

  /// Parses the edge-list text format:
  ///   # comment (anywhere; rest of line ignored)
  ///   n <count>
  ///   <u> <v>        one directed edge u->v per line
  /// Rejects self-loops, duplicate edges, out-of-range endpoints.
  static DiGraph parse(const std::string& text);
  static DiGraph load(const std::string& path);
  std::string to_text() const;

  int size() const { return n_; }
  NodeSet nodes() const { return NodeSet::universe(n_); }
  bool has_edge(NodeId u, NodeId v) const;

  NodeSet out(NodeId i) const { return NodeSet::from_bits(out_[static_cast<size_t>(i)]); }
  NodeSet in(NodeId i) const { return NodeSet::from_bits(in_[static_cast<size_t>(i)]); }
  NodeSet out_closed(NodeId i) const { return out(i) | NodeSet::single(i); }
  NodeSet in_closed(NodeId i) const { return in(i) | NodeSet::single(i); }

  std::vector<std::pair<NodeId, NodeId>> edges() const;  // sorted (u, v)
  int edge_count() const;

  bool operator==(const DiGraph&) const = default;

 private:
  int n_;
  std::vector<uint64_t> out_, in_;
};

/// A candidate crash set together with its size bound f.
struct FaultSet {
  NodeSet members;
  int bound = 0;

  FaultSet() = default;
  FaultSet(NodeSet members, int bound);

  /// Throws invalid-fault-set unless members fit inside g's node set.
  void check_against(const DiGraph& g) const;
};

}  // namespace ctc
