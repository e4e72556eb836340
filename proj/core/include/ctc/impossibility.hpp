#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctc/digraph.hpp"

namespace ctc {

/// Multiset of binary values, which is all an anonymous node can observe.
struct BinaryMultiset {
  int zeros = 0, ones = 0;
  int total() const { return zeros + ones; }
};

/// A fixed anonymous update rule: one output bit per multiset of total size
/// 1..max_size. All-equal multisets are forced (all zeros -> 0, all ones -> 1);
/// the mixed entries are free and identify the table.
class TransitionTable {
 public:
  TransitionTable(int max_size, uint64_t mixed_bits);

  int max_size() const { return max_size_; }
  uint64_t id() const { return bits_; }

  /// Throws incomplete-table for multisets outside the covered sizes.
  int apply(const BinaryMultiset& ms) const;

  static int mixed_entry_count(int max_size);  // sum_{k=2..max}(k-1)
  /// Index of a mixed entry within the free-bit word.
  static int mixed_index(int zeros, int ones);

 private:
  int max_size_;
  uint64_t bits_;
};

/// All 2^mixed_entry_count(max_size) tables. Throws invalid-argument when
/// max_size < 2 or the table space exceeds 2^26.
std::vector<TransitionTable> enumerate_transition_tables(int max_size);

/// The graph on which no fixed anonymous rule can reach consensus: a clique
/// of size f+1 (nodes 0..f), a source s = f+1 with edges into every clique
/// node, and a leaf l = f+2 fed by every clique node. Throws invalid-argument
/// for f < 1.
DiGraph counterexample_graph(int f);
NodeId counterexample_source(int f);
NodeId counterexample_leaf(int f);

struct IterativeRun {
  std::vector<std::vector<int8_t>> states;  // states[t] after iteration t
  int cycle_start = -1;
  int cycle_len = 0;
  bool cycled() const { return cycle_start >= 0; }
};

/// Synchronous anonymous iteration: every live node sends its bit on all
/// out-edges, collects the multiset of its own bit plus everything received,
/// and applies the table. Nodes in crashed_at_start never send. Runs until
/// the global state repeats or max_iters.
IterativeRun run_fixed_iterative(const DiGraph& g, const TransitionTable& table,
                                 const std::vector<int>& inputs,
                                 NodeSet crashed_at_start, int max_iters);

/// True iff the run settled into a fixed state where all live nodes agree on
/// a value that is some node's input. Unanimity is absorbing, so any solved
/// run ends in such a one-state cycle.
bool run_reaches_valid_consensus(const IterativeRun& run, NodeSet live,
                                 const std::vector<int>& inputs);

struct IterScenario {
  std::vector<int> inputs;
  NodeSet crashed;
  std::string name;
};

/// The falsification scenarios: inputs constant on the clique, the source and
/// the leaf (8 patterns) crossed with one crashed clique node or none. The
/// three classic separating scenarios come first. With all_inputs, every
/// binary input vector is appended.
std::vector<IterScenario> impossibility_scenarios(int f, bool all_inputs = false);

struct TableVerdict {
  uint64_t table_id = 0;
  bool falsified = false;
  int scenario_index = -1;
  int cycle_start = -1;
  std::string scenario;
};

struct ImpossibilityReport {
  int f = 0;
  int max_size = 0;
  uint64_t table_count = 0;
  uint64_t falsified_count = 0;
  std::vector<TableVerdict> tables;
  bool ok() const { return falsified_count == table_count; }
};

/// Checks every fixed rule of multiset size up to 2f+2 against the scenario
/// family on counterexample_graph(f); each table must have some scenario
/// whose run never reaches valid consensus. max_iters 0 picks a bound above
/// the state-space size so cycle detection is total.
ImpossibilityReport verify_impossibility(int f, int max_iters = 0,
                                         bool all_inputs = false);

}  // namespace ctc
