#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ctc/conditions.hpp"
#include "ctc/schedule.hpp"

namespace ctc {

enum class TraceLevel { none, states, full };

/// Post-round snapshot. `round == 0` rows are the per-iteration snapshots
/// taken right after the local test that seeds the binary flag (multi-valued
/// engine only). `tentative` is empty for min-max traces. `active` marks
/// nodes still running (neither crashed nor decided).
struct SyncStateRow {
  int iteration = -1;  // -1 for min-max
  int phase = 0;       // global phase index
  int round = 0;
  std::vector<int8_t> value;
  std::vector<int8_t> tentative;
  uint64_t active = 0;
};

struct SyncDelivery {
  int iteration = -1;
  int phase = 0;
  int round = 0;
  NodeId from = -1, to = -1;
  int8_t value = 0;
  int8_t tentative = -1;  // -1 in min-max traces
};

/// Summary of one outer iteration (min-max runs have a single block with
/// iteration == -1 and empty tentative/begin fields).
struct SyncBlockSummary {
  int iteration = -1;
  std::vector<int8_t> t_begin, v_begin;  // after the iteration's local test
  std::vector<int8_t> v_end, t_end;      // after the inner phases
  uint64_t active_begin = 0, active_end = 0;
  uint64_t exited = 0;  // nodes deciding at this iteration
};

struct SyncTrace {
  int n = 0, f = 0, d = 0, phases_per_block = 0;
  int K = -1;  // -1 for min-max
  std::vector<int> inputs;
  TraceLevel level = TraceLevel::states;
  uint64_t crashed = 0;
  std::vector<SyncCrashEvent> fired;
  std::vector<SyncBlockSummary> blocks;
  std::vector<SyncStateRow> rows;
  std::vector<SyncDelivery> deliveries;

  void clear();
};

struct SyncResult {
  NodeSet fault_free;
  std::vector<int> outputs;  // indexed by node; meaningful on fault_free only
  int d = 0;
};

struct Verdict {
  bool agreement = false, validity = false, termination = false;
  std::string details;
  bool all() const { return agreement && validity && termination; }
};

/// Binary flood-and-extremum consensus: 2f+2 phases of d rounds; odd phases
/// keep the maximum of received values, even phases the minimum. Runs on any
/// graph (d falls back to n-1 when the connectivity condition fails).
void run_min_max(const DiGraph& g, int f, const std::vector<int>& inputs,
                 const CrashSchedule& schedule, SyncResult& out,
                 SyncTrace* trace = nullptr);
SyncResult run_min_max(const DiGraph& g, int f, const std::vector<int>& inputs,
                       const CrashSchedule& schedule, SyncTrace* trace = nullptr);

/// Multi-valued consensus over inputs in [0, K]: iterates candidate values
/// l = 0..K; each iteration floods (flag, tentative) tuples through 2f+2
/// phases of d rounds, keeps tentative at the smallest value above l seen,
/// and decides l as soon as the flag floods to 0 everywhere. Nodes that
/// finish iteration K without exiting output K.
void run_mvc(const DiGraph& g, int f, int K, const std::vector<int>& inputs,
             const CrashSchedule& schedule, SyncResult& out,
             SyncTrace* trace = nullptr);
SyncResult run_mvc(const DiGraph& g, int f, int K, const std::vector<int>& inputs,
                   const CrashSchedule& schedule, SyncTrace* trace = nullptr);

/// agreement: all fault-free outputs equal; validity: every fault-free output
/// equals some node's input; termination: every fault-free node has an output.
Verdict check_verdict(const SyncTrace& trace, const std::vector<int>& inputs,
                      const std::map<NodeId, int>& outputs);
Verdict check_verdict(const SyncResult& result, const std::vector<int>& inputs);

std::map<NodeId, int> outputs_map(const SyncResult& result);

struct MvcViolation {
  int iteration = -1;
  NodeId node = -1;
  std::string check;
  std::string detail;
};

struct MvcInvariantReport {
  std::vector<MvcViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Trace-level checks for multi-valued runs (requires a states-level trace):
///  flag-one-implies-higher-tentative  while iterating l < K, any active node
///                                     with flag 1 holds tentative > l;
///  uniform-exit-flag                  all nodes finishing an iteration's
///                                     inner phases share the same flag;
///  exit-had-holder                    if anyone decides l, some node began
///                                     the iteration with tentative == l;
///  tentative-is-an-input              every recorded tentative equals some
///                                     node's input.
MvcInvariantReport check_mvc_invariants(const SyncTrace& trace);

struct FlowReport {
  bool ok = true;
  std::string detail;
};

/// For a violation-witness execution (witness fault set crashed at start,
/// side_a all-0, side_b all-1): verifies no delivery reaches side_a from
/// outside it and no payload 1 is ever consumed inside side_a.
/// Requires a full trace.
FlowReport check_witness_flow(const SyncTrace& trace, const ConnectivityWitness& w);

/// Deliveries as CSV rows: phase,round,sender,receiver,payload.
void write_sync_csv(const SyncTrace& trace, std::ostream& os);

}  // namespace ctc
