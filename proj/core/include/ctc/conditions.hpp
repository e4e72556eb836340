#pragma once

#include <optional>
#include <vector>

#include "ctc/digraph.hpp"

namespace ctc {

/// Subgraph left after deleting a fault set and every edge incident on it.
/// Neighborhood queries are valid for surviving members only.
class ReducedGraph {
 public:
  ReducedGraph(const DiGraph& g, const FaultSet& f);

  int base_size() const { return n_; }
  NodeSet nodes() const { return nodes_; }
  NodeSet removed() const { return removed_; }

  NodeSet out(NodeId i) const;
  NodeSet in(NodeId i) const;
  NodeSet out_closed(NodeId i) const;
  NodeSet in_closed(NodeId i) const;

  /// Nodes with a directed path to i (ancestors), including i itself.
  NodeSet reach_to(NodeId i) const;
  /// Nodes reachable from s (descendants), including s itself.
  NodeSet reach_from(NodeId s) const;

  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  void check_member(NodeId i) const;
  int n_;
  NodeSet nodes_, removed_;
  std::vector<uint64_t> out_, in_;
};

/// Disjoint three-way split of the node set; for partition-condition checks
/// the left and right parts must be nonempty.
struct Partition3 {
  NodeSet left, mid, right;
  void check_against(const DiGraph& g, bool require_sides_nonempty) const;
};

/// Evidence that k-fault connectivity fails: after removing `faults`, no
/// survivor reaches both `pivot_a` and `pivot_b`; `side_a`/`side_b` are their
/// ancestor sets, `rest` the remaining survivors. No edge enters side_a from
/// side_b or rest, and vice versa.
struct ConnectivityWitness {
  NodeSet faults;
  NodeId pivot_a = -1, pivot_b = -1;
  NodeSet side_a, side_b, rest;
};

/// Evidence that the asynchronous partition condition fails at f: neither
/// left_boundary (the <=f nodes of mid|right with edges into left) nor
/// right_boundary (the <=f nodes of left|mid with edges into right) exceeds f.
struct PartitionWitness {
  Partition3 partition;
  NodeSet left_boundary, right_boundary;
};

struct AsyncConditionResult {
  bool holds = false;
  std::optional<PartitionWitness> witness;
};

ReducedGraph reduced_graph(const DiGraph& g, const FaultSet& f);

/// Ancestor set of i after removing `f`: every node with a directed path to i
/// in the reduced graph, i included. Throws invalid-argument if i is removed.
NodeSet reach_set(const DiGraph& g, const FaultSet& f, NodeId i);

/// All nodes whose forward-reachable set covers the whole reduced graph;
/// empty iff no single survivor reaches every survivor.
NodeSet sources(const ReducedGraph& h);

/// True iff every fault set of size <= k (proper subsets of V) leaves a
/// reduced graph with at least one source.
bool ct_node_connectivity(const DiGraph& g, int k);

/// Eccentricity of r inside h: the longest shortest-path distance from r,
/// which is the minimum height over spanning trees rooted at r.
/// Throws not-a-root if r does not reach all of h.
int height(const ReducedGraph& h, NodeId r);

/// Worst-case flooding horizon: max over fault sets of size <= f and over
/// sources s of the reduced graph of height(s). Throws infeasible-graph when
/// ct_node_connectivity(g, f) fails.
int fault_diameter(const DiGraph& g, int f);

/// True iff b is nonempty and at least f+1 distinct members of a have an
/// outgoing edge into b. Throws invalid-partition when a and b overlap.
bool propagates(const DiGraph& g, NodeSet a, NodeSet b, int f);

/// Checks every three-way partition with nonempty left/right parts: one of
/// left|mid -> right or mid|right -> left must propagate at level f.
/// On failure returns the first violating partition with its boundary sets.
AsyncConditionResult async_condition(const DiGraph& g, int f);

/// When ct_node_connectivity(g, f) fails, extracts the smallest failing fault
/// set (size then lexicographic order) and the smallest pivot pair with
/// disjoint ancestor sets; returns nothing when the condition holds.
std::optional<ConnectivityWitness> ct_violation_witness(const DiGraph& g, int f);

/// Revalidates a witness directly against g: partition shape, the <=f bound,
/// disjoint ancestor closure, and the absence of edges into either side from
/// the opposite side or the remainder.
bool witness_consistent(const DiGraph& g, int f, const ConnectivityWitness& w);

}  // namespace ctc
