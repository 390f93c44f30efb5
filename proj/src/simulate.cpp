#include "oblivcrn/simulate.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace obliv {

SimResult simulate(const Crn& crn, const std::vector<long long>& input,
                   uint64_t seed, long long max_steps) {
  SimResult result;
  result.seed = seed;
  Configuration at = initial_configuration(crn, input);

  // mt19937_64 is bit-for-bit portable; modulo keeps the draw portable too
  // (std::uniform_int_distribution is not pinned down by the standard).
  std::mt19937_64 gen(seed);
  const auto& reactions = crn.reactions();
  std::vector<int> applicable_now;
  applicable_now.reserve(reactions.size());

  while (static_cast<long long>(result.steps.size()) < max_steps) {
    applicable_now.clear();
    for (std::size_t r = 0; r < reactions.size(); ++r)
      if (applicable(at, reactions[r]))
        applicable_now.push_back(static_cast<int>(r));
    if (applicable_now.empty()) {
      result.converged = true;
      break;
    }
    const int pick =
        applicable_now[gen() % static_cast<uint64_t>(applicable_now.size())];
    at = apply_reaction(at, reactions[pick]);
    result.steps.push_back({pick, output_count_of(crn, at)});
  }
  result.terminal = std::move(at);
  return result;
}

std::string trace_csv(const SimResult& result) {
  std::ostringstream out;
  out << "step,reaction_index,Y_count\n";
  for (std::size_t i = 0; i < result.steps.size(); ++i)
    out << i + 1 << "," << result.steps[i].reaction << ","
        << result.steps[i].y << "\n";
  return out.str();
}

ConvergenceStats convergence_stats(const Crn& crn,
                                   const std::vector<long long>& input,
                                   long long expected,
                                   const std::vector<uint64_t>& seeds,
                                   long long max_steps) {
  ConvergenceStats stats;
  long long total_steps = 0;
  for (uint64_t seed : seeds) {
    const SimResult run = simulate(crn, input, seed, max_steps);
    ++stats.runs;
    const long long fired = static_cast<long long>(run.steps.size());
    total_steps += fired;
    stats.max_steps_seen = std::max(stats.max_steps_seen, fired);
    if (run.converged && output_count_of(crn, run.terminal) == expected)
      ++stats.correct;
  }
  if (stats.runs > 0) {
    stats.fraction_correct =
        static_cast<double>(stats.correct) / static_cast<double>(stats.runs);
    stats.mean_steps =
        static_cast<double>(total_steps) / static_cast<double>(stats.runs);
  }
  return stats;
}

}  // namespace obliv
