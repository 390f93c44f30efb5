#include "oblivcrn/reach.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace obliv {
namespace {

std::string key_of(const Configuration& c) {
  return std::string(reinterpret_cast<const char*>(c.data()),
                     c.size() * sizeof(c[0]));
}

}  // namespace

Caps Caps::from_string(const std::string& text) {
  Caps caps;
  const auto comma = text.find(',');
  const std::string first = text.substr(0, comma);
  const std::string second =
      comma == std::string::npos ? "" : text.substr(comma + 1);
  try {
    if (!first.empty()) caps.max_configs = std::stoull(first);
    if (!second.empty()) caps.max_count = std::stoi(second);
  } catch (const std::exception&) {
    throw std::invalid_argument("caps: expected \"configs,percount\", got \"" +
                                text + "\"");
  }
  if (caps.max_configs == 0 || caps.max_count <= 0)
    throw std::invalid_argument("caps: limits must be positive");
  return caps;
}

std::string Caps::str() const {
  return std::to_string(max_configs) + "," + std::to_string(max_count);
}

std::optional<int> ReachGraph::find(const Configuration& c) const {
  auto it = index_.find(key_of(c));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> ReachGraph::path_to(int node) const {
  std::vector<int> fired;
  for (int at = node; parent[at] != -1; at = parent[at])
    fired.push_back(parent_reaction[at]);
  std::reverse(fired.begin(), fired.end());
  return fired;
}

ReachGraph reachable(const Crn& crn, const Configuration& initial,
                     const Caps& caps) {
  if (static_cast<int>(initial.size()) != crn.species_count())
    throw std::invalid_argument("reachable: configuration size mismatch");
  ReachGraph g;
  auto intern = [&](const Configuration& c) -> int {
    auto [it, fresh] = g.index_.try_emplace(key_of(c),
                                            static_cast<int>(g.nodes.size()));
    if (fresh) {
      g.nodes.push_back(c);
      g.edges.emplace_back();
      g.parent.push_back(-1);
      g.parent_reaction.push_back(-1);
    }
    return it->second;
  };

  intern(initial);
  const auto& reactions = crn.reactions();
  for (std::size_t at = 0; at < g.nodes.size(); ++at) {
    for (std::size_t r = 0; r < reactions.size(); ++r) {
      if (!applicable(g.nodes[at], reactions[r])) continue;
      Configuration next = apply_reaction(g.nodes[at], reactions[r]);
      bool over = false;
      for (int32_t count : next) over = over || count > caps.max_count;
      if (over) {
        g.capped = true;
        continue;
      }
      const bool fresh = !g.find(next).has_value();
      if (fresh && g.nodes.size() >= caps.max_configs) {
        g.capped = true;
        continue;
      }
      const int to = intern(next);
      if (fresh) {
        g.parent[to] = static_cast<int>(at);
        g.parent_reaction[to] = static_cast<int>(r);
      }
      g.edges[at].push_back({static_cast<int>(r), to});
    }
  }
  return g;
}

std::optional<bool> is_stable(const Crn& crn, const Configuration& c,
                              const Caps& caps) {
  const ReachGraph g = reachable(crn, c, caps);
  const long long y0 = output_count_of(crn, c);
  for (const Configuration& node : g.nodes)
    if (output_count_of(crn, node) != y0) return false;
  return g.capped ? std::optional<bool>() : std::optional<bool>(true);
}

}  // namespace obliv
