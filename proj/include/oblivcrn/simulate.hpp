#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oblivcrn/crn.hpp"

namespace obliv {

struct SimStep {
  int reaction;  // index into crn.reactions()
  long long y;   // output count right after firing it
};

struct SimResult {
  uint64_t seed = 0;
  std::vector<SimStep> steps;
  Configuration terminal;  // configuration when the run stopped
  bool converged = false;  // no reaction was applicable any more
};

// Fire up to max_steps reactions, each chosen uniformly among the reaction
// types applicable in the current configuration.  Deterministic for a given
// seed on every platform.
SimResult simulate(const Crn& crn, const std::vector<long long>& input,
                   uint64_t seed, long long max_steps);

// gnuplot-ready export: "step,reaction_index,Y_count" rows.
std::string trace_csv(const SimResult& result);

struct ConvergenceStats {
  int runs = 0;
  int correct = 0;  // converged with the expected output count
  double fraction_correct = 0.0;
  double mean_steps = 0.0;
  long long max_steps_seen = 0;
};

ConvergenceStats convergence_stats(const Crn& crn,
                                   const std::vector<long long>& input,
                                   long long expected,
                                   const std::vector<uint64_t>& seeds,
                                   long long max_steps);

}  // namespace obliv
