#pragma once

#include <cstdint>
#include <vector>

#include "ctc/digraph.hpp"

namespace ctc {

/// One crash: the node behaves normally until (phase, round), where its
/// broadcast reaches only `delivered_to` (a subset of its out-neighbors)
/// plus itself; from then on it is silent. phase counts globally across the
/// whole run (for the multi-valued engine, outer iteration l contributes
/// phases l*(2f+2)+1 .. (l+1)*(2f+2)).
struct SyncCrashEvent {
  NodeId node = -1;
  int phase = 1;
  int round = 1;
  NodeSet delivered_to;

  bool operator==(const SyncCrashEvent&) const = default;
};

struct CrashSchedule {
  int f = 0;
  std::vector<SyncCrashEvent> events;

  /// Throws invalid-schedule unless: |events| <= f, nodes distinct and in
  /// range, phase within [1, total_phases], round within [1, rounds_per_phase],
  /// delivered_to a subset of the crashing node's out-neighbors.
  void validate(const DiGraph& g, int total_phases, int rounds_per_phase) const;

  bool operator==(const CrashSchedule&) const = default;
};

/// Rounds each flooding phase needs: the fault-tolerant diameter when the
/// connectivity condition holds at f, n-1 otherwise (so runs on infeasible
/// graphs still make sense for failure demonstrations).
int flooding_rounds(const DiGraph& g, int f);

/// Every schedule with at most f crashes whose crash points range over all
/// (phase, round, delivered-subset) combinations, plus the empty schedule.
/// Restricted to n <= 4 (invalid-argument beyond that).
std::vector<CrashSchedule> enumerate_schedules(const DiGraph& g, int f,
                                               int total_phases,
                                               int rounds_per_phase);

/// `count` schedules drawn deterministically from `seed`: a uniform number
/// of crashes in [0, f], distinct nodes, uniform phase/round, and a uniform
/// random delivered-subset (so mid-round partial deliveries are common).
std::vector<CrashSchedule> sample_schedules(const DiGraph& g, int f,
                                            int total_phases,
                                            int rounds_per_phase,
                                            uint64_t seed, int count);

/// True iff some two consecutive phases in [1, total_phases] contain no
/// crash event. Guaranteed for any schedule with <= f crashes when
/// total_phases >= 2f+2; the round-engine suites assert it per schedule.
bool has_quiet_phase_pair(const CrashSchedule& schedule, int total_phases);

}  // namespace ctc
