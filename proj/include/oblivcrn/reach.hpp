#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oblivcrn/crn.hpp"

namespace obliv {

// Safety limits for exhaustive exploration.  `max_configs` bounds the number
// of distinct configurations; `max_count` bounds any single species count.
// Hitting either marks the result as capped rather than wrong.
struct Caps {
  std::size_t max_configs = 1'000'000;
  int32_t max_count = 10'000;

  // Parse "configs,percount"; either part may be omitted ("5000" or ",200").
  static Caps from_string(const std::string& text);
  std::string str() const;
};

struct ReachEdge {
  int reaction;  // index into crn.reactions()
  int target;    // node index
};

// Breadth-first closure of a configuration under the reaction relation.
// Node 0 is the initial configuration; `parent`/`parent_reaction` give a
// shortest derivation for every node.  `capped` reports whether exploration
// was cut short by the caps, in which case the closure is a lower bound.
struct ReachGraph {
  std::vector<Configuration> nodes;
  std::vector<std::vector<ReachEdge>> edges;
  std::vector<int> parent;            // -1 for the root
  std::vector<int> parent_reaction;   // -1 for the root
  bool capped = false;

  std::optional<int> find(const Configuration& c) const;
  // Reaction indices firing along the shortest derivation of `node`.
  std::vector<int> path_to(int node) const;

 private:
  friend ReachGraph reachable(const Crn&, const Configuration&, const Caps&);
  std::unordered_map<std::string, int> index_;
};

ReachGraph reachable(const Crn& crn, const Configuration& initial,
                     const Caps& caps = {});

// Whether the output count never changes anywhere reachable from `c`.
// nullopt when the graph was capped and no counterexample surfaced.
std::optional<bool> is_stable(const Crn& crn, const Configuration& c,
                              const Caps& caps = {});

}  // namespace obliv
