#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oblivcrn/crn.hpp"
#include "oblivcrn/reach.hpp"
#include "oblivcrn/spec.hpp"

namespace obliv {

enum class VerdictStatus { Verified, Refuted, Capped };

std::string to_string(VerdictStatus s);

struct TraceStep {
  int reaction;          // index into crn.reactions()
  Configuration config;  // configuration after firing it
};

struct Verdict {
  VerdictStatus status;
  std::string detail;
  // For refutations: a shortest derivation of a configuration from which no
  // stable configuration with the expected output is reachable.
  std::vector<TraceStep> witness;
  std::size_t explored = 0;
};

// Decide whether the network, started on `input` (plus one leader if the
// network has one), stably computes `expected`: from every reachable
// configuration, some configuration whose output count is `expected` and
// never changes again must remain reachable.  Decided exactly by a
// strongly-connected-component analysis of the full reachability graph;
// when exploration hits the caps the verdict is Capped unless a definite
// refutation was already in view.
Verdict stably_computes(const Crn& crn, const std::vector<long long>& input,
                        long long expected, const Caps& caps = {});

// Shortest derivation of a configuration whose output exceeds `expected`,
// if one is reachable within the caps.  In an output-oblivious network the
// output never decreases, so such a derivation refutes the computation.
std::optional<std::vector<TraceStep>> overproduction_witness(
    const Crn& crn, const std::vector<long long>& input, long long expected,
    const Caps& caps = {});

struct WindowResult {
  std::vector<long long> input;
  long long expected;
  Verdict verdict;
};

struct WindowReport {
  VerdictStatus status;  // Refuted if any input refutes, else Capped if any
                         // input capped, else Verified
  std::string detail;
  std::vector<WindowResult> results;
};

// Check every input x with x(i) <= window(i) against the reference
// function.  The scalar overload broadcasts one bound to every axis.
WindowReport verify_window(
    const Crn& crn,
    const std::function<long long(const std::vector<long long>&)>& reference,
    const std::vector<long long>& window, const Caps& caps = {});
WindowReport verify_window(
    const Crn& crn,
    const std::function<long long(const std::vector<long long>&)>& reference,
    long long window, const Caps& caps = {});

// Same, with expectations from a spec; window 0 means the spec's default
// validation window.
WindowReport verify_window(const Crn& crn, const ObliviousSpec& spec,
                           long long window = 0, const Caps& caps = {});
WindowReport verify_window(const Crn& crn, const ObliviousSpec& spec,
                           const std::vector<long long>& window,
                           const Caps& caps = {});

// Stability of every node of a fully explored graph: node i is stable when
// no configuration reachable from it changes the output count.  Precondition:
// !g.capped.
std::vector<bool> stable_nodes(const Crn& crn, const ReachGraph& g);

std::string trace_text(const Crn& crn, const Configuration& initial,
                       const std::vector<TraceStep>& steps);

}  // namespace obliv
