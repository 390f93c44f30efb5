#pragma once

// Deterministic random-network generator shared by the property suites and
// the acceptance checks.

#include <random>
#include <string>
#include <vector>

#include "oblivcrn/crn.hpp"

namespace obliv::testgen {

// Random small network: 1-2 inputs, one output, sometimes a leader and an
// extra auxiliary, never more than four species total, 1-4 reactions with
// coefficients <= 2.  Every reaction consumes something, so spontaneous
// creation from nothing never happens.  With `oblivious` the output never
// appears as a reactant.
inline Crn random_crn(std::mt19937_64& rng, bool oblivious) {
  std::uniform_int_distribution<int> coin(0, 1);
  const int inputs = 1 + coin(rng);
  const bool leader = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
  const bool aux = coin(rng) == 1 && inputs + (leader ? 1 : 0) < 3;

  std::vector<Species> declared;
  std::vector<std::string> names;
  for (int i = 1; i <= inputs; ++i) {
    names.push_back("X" + std::to_string(i));
    declared.push_back({names.back(), SpeciesKind::Input, i});
  }
  const std::size_t y_slot = names.size();
  names.push_back("Y");
  declared.push_back({"Y", SpeciesKind::Output, 1});
  if (leader) {
    names.push_back("L");
    declared.push_back({"L", SpeciesKind::Leader, 0});
  }
  // The auxiliary is only offered to the reaction draws, never declared up
  // front: the text format cannot express an auxiliary that appears in no
  // reaction, and construction auto-declares mentioned species anyway.
  if (aux) names.push_back("A");

  const std::size_t n = names.size();
  std::uniform_int_distribution<int> coeff(0, 2);
  const int target = std::uniform_int_distribution<int>(1, 4)(rng);
  std::vector<ReactionDraft> drafts;

  // Keep the networks lively without forcing growth: the first reaction
  // consumes exactly one input molecule and produces at most one molecule,
  // so most random initial configurations can fire something, yet this
  // reaction alone never blows up the closure.
  {
    const int which = 1 + std::uniform_int_distribution<int>(0, inputs - 1)(rng);
    const std::string input_name = "X" + std::to_string(which);
    std::uniform_int_distribution<std::size_t> pick(0, n);  // n means nothing
    ReactionDraft d;
    d.lhs.push_back({1, input_name});
    for (;;) {
      const std::size_t t = pick(rng);
      if (t == n) break;                     // X -> 0
      if (names[t] == input_name) continue;  // X -> X would change nothing
      d.rhs.push_back({1, names[t]});
      break;
    }
    drafts.push_back(std::move(d));
  }

  while (static_cast<int>(drafts.size()) < target) {
    std::vector<int64_t> lhs(n, 0), rhs(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      lhs[s] = coeff(rng);
      rhs[s] = coeff(rng);
    }
    if (oblivious) lhs[y_slot] = 0;
    int64_t consumed = 0;
    bool differ = false;
    for (std::size_t s = 0; s < n; ++s) {
      consumed += lhs[s];
      differ = differ || lhs[s] != rhs[s];
    }
    if (consumed == 0 || !differ) continue;
    ReactionDraft d;
    for (std::size_t s = 0; s < n; ++s) {
      if (lhs[s]) d.lhs.push_back({lhs[s], names[s]});
      if (rhs[s]) d.rhs.push_back({rhs[s], names[s]});
    }
    drafts.push_back(std::move(d));
  }
  return Crn::make(std::move(declared), drafts);
}

inline std::vector<long long> random_input(std::mt19937_64& rng, int dim,
                                           long long max_count) {
  std::uniform_int_distribution<long long> d(0, max_count);
  std::vector<long long> x(dim);
  for (auto& v : x) v = d(rng);
  return x;
}

}  // namespace obliv::testgen
