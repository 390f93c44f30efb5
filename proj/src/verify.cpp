#include "oblivcrn/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "oblivcrn/crn_text.hpp"

namespace obliv {
namespace {

// Strongly connected components, identified in reverse topological order of
// the condensation: every component's successors get smaller ids.
std::vector<int> scc_of(const std::vector<std::vector<ReachEdge>>& edges,
                        int& count) {
  const int n = static_cast<int>(edges.size());
  std::vector<int> comp(n, -1), index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  count = 0;
  int next_index = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.node;
      if (f.edge == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (f.edge < edges[v].size()) {
        const int w = edges[v][f.edge++].target;
        if (index[w] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
          if (w == v) break;
        }
        ++count;
      }
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().node] = std::min(low[frames.back().node], low[v]);
    }
  }
  return comp;
}

struct Analysis {
  std::vector<int> comp;
  int scc_count = 0;
  std::vector<std::vector<int>> succ;   // cross-component edges (duplicates ok)
  std::vector<long long> value;         // min output count in the component
  std::vector<char> const_down;         // output constant here and downstream
};

Analysis analyze(const Crn& crn, const ReachGraph& g) {
  Analysis a;
  a.comp = scc_of(g.edges, a.scc_count);
  a.succ.resize(a.scc_count);
  constexpr long long kUnset = std::numeric_limits<long long>::min();
  std::vector<long long> lo(a.scc_count, kUnset), hi(a.scc_count, kUnset);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const long long y = output_count_of(crn, g.nodes[i]);
    const int s = a.comp[i];
    if (lo[s] == kUnset) {
      lo[s] = hi[s] = y;
    } else {
      lo[s] = std::min(lo[s], y);
      hi[s] = std::max(hi[s], y);
    }
    for (const ReachEdge& e : g.edges[i]) {
      const int t = a.comp[e.target];
      if (t != s) a.succ[s].push_back(t);
    }
  }
  // Successors have smaller ids: ascending order finalizes them first.
  a.value = lo;
  a.const_down.assign(a.scc_count, 0);
  for (int s = 0; s < a.scc_count; ++s) {
    a.const_down[s] = (lo[s] == hi[s]);
    for (int t : a.succ[s])
      if (!a.const_down[t] || a.value[t] != a.value[s]) a.const_down[s] = 0;
  }
  return a;
}

std::vector<TraceStep> trace_from(const Crn& crn, const ReachGraph& g,
                                  int node) {
  std::vector<TraceStep> steps;
  Configuration at = g.nodes[0];
  for (int r : g.path_to(node)) {
    at = apply_reaction(at, crn.reactions()[r]);
    steps.push_back({r, at});
  }
  return steps;
}

std::string input_str(const std::vector<long long>& input) {
  std::string out = "(";
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(input[i]);
  }
  return out + ")";
}

}  // namespace

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "verified";
    case VerdictStatus::Refuted: return "refuted";
    case VerdictStatus::Capped: return "capped";
  }
  return "?";
}

std::vector<bool> stable_nodes(const Crn& crn, const ReachGraph& g) {
  if (g.capped)
    throw std::invalid_argument("stable_nodes: graph was capped");
  const Analysis a = analyze(crn, g);
  std::vector<bool> stable(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    stable[i] = a.const_down[a.comp[i]] != 0;
  return stable;
}

Verdict stably_computes(const Crn& crn, const std::vector<long long>& input,
                        long long expected, const Caps& caps) {
  const Configuration initial = initial_configuration(crn, input);
  const ReachGraph g = reachable(crn, initial, caps);
  Verdict v;
  v.explored = g.nodes.size();

  if (g.capped) {
    // A definite refutation can survive the caps: with an output that no
    // reaction consumes, overshooting can never be undone.
    if (is_output_oblivious(crn)) {
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (output_count_of(crn, g.nodes[i]) > expected) {
          v.status = VerdictStatus::Refuted;
          v.witness = trace_from(crn, g, static_cast<int>(i));
          v.detail = "refuted at input " + input_str(input) + ": output " +
                     std::to_string(output_count_of(crn, g.nodes[i])) +
                     " exceeds expected " + std::to_string(expected) +
                     " and the output is never consumed";
          return v;
        }
      }
    }
    v.status = VerdictStatus::Capped;
    v.detail = "exploration capped (caps " + caps.str() + ") after " +
               std::to_string(g.nodes.size()) + " configurations";
    return v;
  }

  const Analysis a = analyze(crn, g);
  // good: some configuration whose output is `expected` and never changes
  // again stays reachable.
  std::vector<char> good(a.scc_count, 0);
  for (int s = 0; s < a.scc_count; ++s) {
    good[s] = a.const_down[s] && a.value[s] == expected;
    for (int t : a.succ[s])
      if (good[t]) good[s] = 1;
  }

  int bad = -1;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (!good[a.comp[i]]) {
      bad = static_cast<int>(i);
      break;
    }
  }
  if (bad == -1) {
    v.status = VerdictStatus::Verified;
    v.detail = "verified at input " + input_str(input) + ": " +
               std::to_string(g.nodes.size()) +
               " configurations, output stabilizes at " +
               std::to_string(expected);
    return v;
  }
  v.status = VerdictStatus::Refuted;
  v.witness = trace_from(crn, g, bad);
  v.detail = "refuted at input " + input_str(input) + ": configuration " +
             format_configuration(crn, g.nodes[bad]) + " (output " +
             std::to_string(output_count_of(crn, g.nodes[bad])) +
             ") cannot reach a stable configuration with output " +
             std::to_string(expected);
  return v;
}

std::optional<std::vector<TraceStep>> overproduction_witness(
    const Crn& crn, const std::vector<long long>& input, long long expected,
    const Caps& caps) {
  const Configuration initial = initial_configuration(crn, input);
  const ReachGraph g = reachable(crn, initial, caps);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (output_count_of(crn, g.nodes[i]) > expected)
      return trace_from(crn, g, static_cast<int>(i));
  return std::nullopt;
}

WindowReport verify_window(
    const Crn& crn,
    const std::function<long long(const std::vector<long long>&)>& reference,
    const std::vector<long long>& window, const Caps& caps) {
  const int d = crn.dimension();
  if (static_cast<int>(window.size()) != d)
    throw std::invalid_argument("verify_window: window arity mismatch");
  for (long long w : window)
    if (w < 0) throw std::invalid_argument("verify_window: window < 0");

  WindowReport report;
  report.status = VerdictStatus::Verified;
  long long inputs = 1;
  for (long long w : window) inputs *= w + 1;

  std::vector<long long> x(d, 0);
  while (true) {
    WindowResult r{x, reference(x), {}};
    r.verdict = stably_computes(crn, x, r.expected, caps);
    if (r.verdict.status == VerdictStatus::Refuted &&
        report.status != VerdictStatus::Refuted) {
      report.status = VerdictStatus::Refuted;
      report.detail = r.verdict.detail;
    } else if (r.verdict.status == VerdictStatus::Capped &&
               report.status == VerdictStatus::Verified) {
      report.status = VerdictStatus::Capped;
      report.detail = r.verdict.detail;
    }
    report.results.push_back(std::move(r));

    int axis = 0;
    while (axis < d && x[axis] == window[axis]) x[axis++] = 0;
    if (axis == d) break;
    ++x[axis];
  }
  if (report.status == VerdictStatus::Verified)
    report.detail = "verified: all " + std::to_string(inputs) +
                    " inputs in the window stabilize correctly";
  return report;
}

WindowReport verify_window(
    const Crn& crn,
    const std::function<long long(const std::vector<long long>&)>& reference,
    long long window, const Caps& caps) {
  return verify_window(crn, reference,
                       std::vector<long long>(crn.dimension(), window), caps);
}

WindowReport verify_window(const Crn& crn, const ObliviousSpec& spec,
                           const std::vector<long long>& window,
                           const Caps& caps) {
  if (static_cast<std::size_t>(crn.dimension()) != spec.free_axes().size())
    throw std::invalid_argument(
        "verify_window: network arity does not match spec");
  const auto free_axes = spec.free_axes();
  auto reference = [&spec, free_axes](const std::vector<long long>& x) {
    std::vector<long long> full(spec.dim(), 0);
    for (const auto& [axis, value] : spec.fixed()) full[axis - 1] = value;
    for (std::size_t i = 0; i < free_axes.size(); ++i)
      full[free_axes[i] - 1] = x[i];
    return spec_eval(spec, full);
  };
  return verify_window(crn, reference, window, caps);
}

WindowReport verify_window(const Crn& crn, const ObliviousSpec& spec,
                           long long window, const Caps& caps) {
  const long long w = window > 0 ? window : default_validation_window(spec);
  return verify_window(crn, spec,
                       std::vector<long long>(crn.dimension(), w), caps);
}

std::string trace_text(const Crn& crn, const Configuration& initial,
                       const std::vector<TraceStep>& steps) {
  std::ostringstream out;
  out << "start: " << format_configuration(crn, initial) << "\n";
  for (const TraceStep& step : steps) {
    out << "fire: " << print_reaction(crn, crn.reactions()[step.reaction])
        << " => " << format_configuration(crn, step.config) << "\n";
  }
  return out.str();
}

}  // namespace obliv
