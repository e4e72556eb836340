#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctc/conditions.hpp"
#include "ctc/rational.hpp"
#include "ctc/sync.hpp"

namespace ctc {

struct DelayPolicy {
  enum class Mode { uniform_random, gatekeeper_adversary, fifo_fixed };

  Mode mode = Mode::fifo_fixed;
  uint64_t seed = 0;
  int64_t min_delay = 1;
  int64_t max_delay = 4;
  /// Applied to delayed_edges in gatekeeper mode; large enough that whole
  /// runs finish before any delayed message arrives.
  int64_t big_delay = 1'000'000'000'000LL;
  std::vector<std::pair<NodeId, NodeId>> delayed_edges;

  static const char* mode_name(Mode m);
  static Mode mode_from_name(const std::string& name);  // throws invalid-config
};

/// The node halts when it next processes an event once the global event
/// counter has reached event_index; the relay burst of that event reaches
/// only partial_send. event_index 0 truncates the node's initial flood.
struct AsyncCrash {
  NodeId node = -1;
  uint64_t event_index = 0;
  NodeSet partial_send;
};

struct WaConfig {
  Rat epsilon;            // must be > 0
  int f = 0;
  int p_end_override = 0;  // 0 = derive from p_end_bound
};

/// Smallest P >= 1 with (1 - 1/n)^P * (M - m) <= epsilon (1 when M == m or
/// the spread is already within epsilon). Throws invalid-argument unless
/// epsilon > 0 and M >= m.
int p_end_bound(int n, int f, const Rat& M, const Rat& m, const Rat& epsilon);

struct WaitWitness {
  bool holds = false;
  NodeSet fault_candidate;  // smallest candidate set when holds
};

/// True iff some candidate fault set F (|F| <= f, i not in F) has all of i's
/// surviving ancestors inside `heard`. Candidates are tried smallest-first.
WaitWitness condition_wait(const DiGraph& g, int f, NodeId i, NodeSet heard);

enum class AsyncEventKind : uint8_t { send, deliver, drop, advance, crash, decide };

struct AsyncEventRow {
  int64_t time = 0;
  uint64_t seq = 0;
  AsyncEventKind kind = AsyncEventKind::send;
  NodeId from = -1, to = -1;
  Rat value;
  NodeId origin = -1;
  int phase = 0;
};

struct AsyncTrace {
  int n = 0, f = 0, p_end = 0;
  std::vector<Rat> inputs;
  TraceLevel level = TraceLevel::states;
  /// values[i][p] is node i's phase-p state (p = 0 is the input); absent
  /// where the node never completed the phase.
  std::vector<std::vector<std::optional<Rat>>> values;
  /// heard_used[i][p] is the heard set at averaging time (p >= 1).
  std::vector<std::vector<NodeSet>> heard_used;
  NodeSet crashed, decided;
  bool starved = false;
  std::string starve_detail;
  std::vector<AsyncEventRow> events;  // full level only
};

struct AsyncResult {
  std::map<NodeId, Rat> outputs;
  NodeSet fault_free;
  int p_end = 0;
  bool terminated = false;
};

/// Event-driven wait-and-average run: every node floods (value, id, phase)
/// messages, relays every message on first receipt, and averages the distinct
/// values received in its current phase as soon as some candidate fault set
/// of size <= f explains everyone it has not heard from. Deterministic for a
/// fixed (graph, inputs, policy, crashes, config).
AsyncResult run_wa(const DiGraph& g, int f, const std::vector<Rat>& inputs,
                   const DelayPolicy& policy, const std::vector<AsyncCrash>& crashes,
                   const WaConfig& config, AsyncTrace* trace = nullptr);

/// epsilon-agreement: max pairwise distance between fault-free outputs is at
/// most epsilon; validity: outputs lie in [min input, max input]; termination:
/// every fault-free node produced an output.
Verdict check_epsilon_verdict(const std::map<NodeId, Rat>& outputs,
                              const std::vector<Rat>& inputs, const Rat& epsilon,
                              NodeSet fault_free);

struct HeardViolation {
  int phase = 0;
  NodeId a = -1, b = -1;
};

/// For every phase, every pair of nodes that both averaged must share at
/// least one heard node.
std::vector<HeardViolation> check_heard_intersection(const AsyncTrace& trace);

/// Per-phase (min, max) over the values computed in that phase; entry 0
/// spans the inputs. Phases nobody completed are absent.
std::vector<std::optional<std::pair<Rat, Rat>>> phase_ranges(const AsyncTrace& trace);

/// Event log as CSV rows: time,kind,from,to,value,origin,phase.
void write_async_csv(const AsyncTrace& trace, std::ostream& os);

}  // namespace ctc
