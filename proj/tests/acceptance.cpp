// Standalone acceptance gate: nine criteria, one PASS/FAIL line each, with
// pinned tolerances and runtime budgets.  Checks stay active in every build
// type; the binary exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oblivcrn/builtins.hpp"
#include "oblivcrn/compile_1d.hpp"
#include "oblivcrn/compile_spec.hpp"
#include "oblivcrn/compose.hpp"
#include "oblivcrn/crn.hpp"
#include "oblivcrn/crn_text.hpp"
#include "oblivcrn/dickson.hpp"
#include "oblivcrn/gadgets.hpp"
#include "oblivcrn/quilt.hpp"
#include "oblivcrn/rational.hpp"
#include "oblivcrn/reach.hpp"
#include "oblivcrn/semilinear1d.hpp"
#include "oblivcrn/simulate.hpp"
#include "oblivcrn/spec.hpp"
#include "oblivcrn/spec_json.hpp"
#include "oblivcrn/verify.hpp"
#include "support.hpp"

using namespace obliv;

namespace {

struct Failure {
  std::string message;
};

// Always-on requirement: never compiled out in Release.  Throws so the
// remaining criteria still run and report.
#define REQUIRE(cond)                                                        \
  do {                                                                       \
    if (!(cond)) {                                                           \
      throw Failure{std::string(__FILE__ ":") + std::to_string(__LINE__) +   \
                    ": requirement failed: " #cond};                         \
    }                                                                        \
  } while (0)

#define REQUIRE_MSG(cond, msg)                                               \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::ostringstream os_;                                                \
      os_ << __FILE__ << ":" << __LINE__ << ": " << msg;                     \
      throw Failure{os_.str()};                                              \
    }                                                                        \
  } while (0)

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE_MSG(in.good(), "cannot open test data file " << name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fmt_point(const std::vector<long long>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

// Every x with 0 <= x(i) <= window(i), first axis fastest.
template <typename Fn>
void for_each_point(const std::vector<long long>& window, Fn&& fn) {
  std::vector<long long> x(window.size(), 0);
  while (true) {
    fn(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == window[i]) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
  }
}

// Networks whose computations were verified by the earlier criteria; the
// convergence criterion sweeps every (network, input) pair again under the
// randomized scheduler.
struct CorpusEntry {
  std::string name;
  Crn crn;
  PointFn fn;
  std::vector<long long> window;
};

std::vector<CorpusEntry> g_corpus;

WindowReport verify_and_record(const std::string& name, const Crn& crn,
                               const PointFn& fn,
                               const std::vector<long long>& window) {
  WindowReport report = verify_window(crn, fn, window);
  REQUIRE_MSG(report.status == VerdictStatus::Verified,
              name << ": " << report.detail);
  g_corpus.push_back({name, crn, fn, window});
  return report;
}

const char* kDoubleText = "inputs: X\noutput: Y\nX -> 2 Y\n";
const char* kMinText = "inputs: X1 X2\noutput: Y\nX1 + X2 -> Y\n";
const char* kMaxText =
    "inputs: X1 X2\noutput: Y\n"
    "X1 -> Z1 + Y\n"
    "X2 -> Z2 + Y\n"
    "Z1 + Z2 -> K\n"
    "K + Y -> 0\n";
const char* kTwoMinText =
    "inputs: X1 X2\noutput: Y\nX1 + X2 -> W\nW -> 2 Y\n";

// --- criterion 1: the four worked networks ---------------------------------

std::string criterion1() {
  Crn dbl = parse_crn(kDoubleText);
  Crn mn = parse_crn(kMinText);
  Crn mx = parse_crn(kMaxText);
  Crn two_min = parse_crn(kTwoMinText);

  PointFn f_dbl = [](const std::vector<long long>& x) { return 2 * x[0]; };
  PointFn f_min = [](const std::vector<long long>& x) {
    return std::min(x[0], x[1]);
  };
  PointFn f_max = [](const std::vector<long long>& x) {
    return std::max(x[0], x[1]);
  };
  PointFn f_2min = [](const std::vector<long long>& x) {
    return 2 * std::min(x[0], x[1]);
  };

  verify_and_record("2x", dbl, f_dbl, {8});
  verify_and_record("min", mn, f_min, {4, 4});
  verify_and_record("max", mx, f_max, {4, 4});
  verify_and_record("2min", two_min, f_2min, {4, 4});

  REQUIRE(is_output_oblivious(dbl));
  REQUIRE(is_output_oblivious(mn));
  REQUIRE(is_output_oblivious(two_min));
  REQUIRE_MSG(!is_output_oblivious(mx),
              "the max network consumes its output and must be flagged");

  return "four worked networks verified on windows (4,4) / 0..8; "
         "obliviousness flags as expected";
}

// --- criterion 2: single-piece walks ---------------------------------------

std::string criterion2() {
  QuiltAffine floor32 =
      QuiltAffine::make({Rational(3, 2)}, 2, {Rational(0), Rational(-1, 2)});
  Crn walk1 = compile_quilt(floor32);
  REQUIRE_MSG(walk1.reactions().size() == 3,
              "expected 1 + 1*2 = 3 reactions, got " << walk1.reactions().size());
  PointFn f32 = [](const std::vector<long long>& x) { return 3 * x[0] / 2; };
  verify_and_record("walk floor(3x/2)", walk1, f32, {12});

  QuiltAffine ceil_half = QuiltAffine::make(
      {Rational(1, 2), Rational(1, 2)}, 2,
      {Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)});
  Crn walk2 = compile_quilt(ceil_half);
  REQUIRE_MSG(walk2.reactions().size() == 9,
              "expected 1 + 2*4 = 9 reactions, got " << walk2.reactions().size());
  PointFn fceil = [](const std::vector<long long>& x) {
    return (x[0] + x[1] + 1) / 2;
  };
  verify_and_record("walk ceil((x1+x2)/2)", walk2, fceil, {6, 6});

  return "piece walks verified on 0..12 and [0,6]^2 with exactly 3 and 9 "
         "reactions";
}

// --- criterion 3: full spec compilation ------------------------------------

long long piece_min_at_floor(const ObliviousSpec& s, std::vector<long long> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::max(x[i], s.floor()[i]);
  }
  long long best = std::numeric_limits<long long>::max();
  for (const QuiltAffine& g : s.pieces()) {
    best = std::min(best, quilt_eval(g, x));
  }
  return best;
}

// The defining identity of a spec: its value is the min of the shifted piece
// value and, per restriction, the restricted value plus the piece value gated
// on the pinned coordinate being exceeded.  Checked at every window point of
// the spec and, recursively, of every nested restriction.
void check_recursion_identity(const ObliviousSpec& s,
                              const std::vector<long long>& window) {
  std::vector<long long> x(static_cast<std::size_t>(s.dim()), 0);
  for (auto [axis, value] : s.fixed()) x[axis - 1] = value;
  const std::vector<int> free = s.free_axes();
  while (true) {
    const long long base = piece_min_at_floor(s, x);
    long long rhs = base;
    for (const auto& r : s.restrictions()) {
      std::vector<long long> pinned = x;
      pinned[r.axis - 1] = r.value;
      long long term = spec_eval(*r.spec, pinned) +
                       (x[r.axis - 1] > r.value ? base : 0);
      rhs = std::min(rhs, term);
    }
    REQUIRE_MSG(spec_eval(s, x) == rhs,
                "recursion identity fails at " << fmt_point(x) << ": f = "
                                               << spec_eval(s, x)
                                               << " but the term min is "
                                               << rhs);
    std::size_t i = 0;
    while (i < free.size() && x[free[i] - 1] == window[free[i] - 1]) {
      x[free[i++] - 1] = 0;
    }
    if (i == free.size()) break;
    ++x[free[i] - 1];
  }
  for (const auto& r : s.restrictions()) {
    check_recursion_identity(*r.spec, window);
  }
}

std::string criterion3() {
  ObliviousSpec min1x = parse_spec_json_text(slurp("min1x.json"));
  Crn compiled_min1x = compile_spec(min1x);
  WindowReport r1 = verify_window(compiled_min1x, min1x, 6);
  REQUIRE_MSG(r1.status == VerdictStatus::Verified, r1.detail);
  REQUIRE(r1.results.size() == 7);
  g_corpus.push_back({"compiled min(1,x)", compiled_min1x,
                      [min1x](const std::vector<long long>& x) {
                        return spec_eval(min1x, x);
                      },
                      {6}});

  ObliviousSpec roof = parse_spec_json_text(slurp("roof.json"));
  Crn compiled_roof = compile_spec(roof);
  WindowReport r2 = verify_window(compiled_roof, roof, 4);
  REQUIRE_MSG(r2.status == VerdictStatus::Verified, r2.detail);
  REQUIRE(r2.results.size() == 25);
  g_corpus.push_back({"compiled roof", compiled_roof,
                      [roof](const std::vector<long long>& x) {
                        return spec_eval(roof, x);
                      },
                      {4, 4}});

  check_recursion_identity(min1x, {6});
  check_recursion_identity(roof, {4, 4});

  return "compiled specs verified exhaustively (7 + 25 inputs, uncapped); "
         "recursion identity holds at every window point";
}

// --- criterion 4: witnesses against naive and non-compilable targets -------

std::string criterion4() {
  Crn naive = parse_crn("inputs: X1 X2\noutput: Y\nX1 -> Y\nX2 -> Y\n");
  auto over = overproduction_witness(naive, {1, 1}, 1);
  REQUIRE_MSG(over.has_value(),
              "the naive sum network must overshoot max(1,1) = 1");
  REQUIRE_MSG(over->size() == 2,
              "expected a 2-step overproduction trace, got " << over->size());
  REQUIRE(output_count_of(naive, over->back().config) == 2);

  auto shifted = [](std::vector<long long> p,
                    const std::vector<long long>& d) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += d[i];
    return p;
  };

  const Builtin& mx = builtin_function("max");
  auto w = dickson_search(mx.fn, mx.dim, 5);
  REQUIRE_MSG(w.has_value(), "max must yield a growing-increment witness");
  REQUIRE(w->family_size >= 4);
  REQUIRE(w->a1 == w->base);
  REQUIRE(w->a2 == shifted(w->base, w->direction));
  std::vector<long long> doubled = w->delta_direction;
  for (long long& v : doubled) v *= 2;
  REQUIRE(w->delta == doubled);
  REQUIRE(w->lhs == mx.fn(shifted(w->a1, w->delta)) - mx.fn(w->a1));
  REQUIRE(w->rhs == mx.fn(shifted(w->a2, w->delta)) - mx.fn(w->a2));
  REQUIRE_MSG(w->lhs > w->rhs,
              "the witness must show strictly growing increments");

  REQUIRE(!dickson_search(builtin_function("min").fn, 2, 5).has_value());
  REQUIRE(!dickson_search(builtin_function("floor3x2").fn, 1, 5).has_value());
  REQUIRE(!dickson_search(builtin_function("roof").fn, 2, 5).has_value());
  const Builtin& strip = builtin_function("depressed-strip");
  REQUIRE_MSG(dickson_search(strip.fn, strip.dim, 5).has_value(),
              "depressed-strip must yield a growing-increment witness");

  return "overproduction trace and growing-increment witnesses found (and "
         "absent) exactly where required at bound 5";
}

// --- criterion 5: one-dimensional compilation ------------------------------

std::string criterion5() {
  Semilinear1D floor32 = parse_sl1d_json_text(slurp("floor3x2.json"));
  Semilinear1D min1x = parse_sl1d_json_text(slurp("min1x-fn.json"));
  Semilinear1D dbl = parse_sl1d_json_text(slurp("double.json"));

  Eventual1DForm form = extract_eventual_1d(floor32);
  Eventual1DForm expected{0, 2, {0}, {1, 2}};
  REQUIRE_MSG(form == expected,
              "eventual form of floor(3x/2) must be n=0, p=2, deltas=(1,2)");

  PointFn f32 = [](const std::vector<long long>& x) { return 3 * x[0] / 2; };
  PointFn fmin1 = [](const std::vector<long long>& x) {
    return std::min<long long>(1, x[0]);
  };
  PointFn fdbl = [](const std::vector<long long>& x) { return 2 * x[0]; };

  verify_and_record("leadered min(1,x)", compile_1d(min1x), fmin1, {10});
  verify_and_record("leadered floor(3x/2)", compile_1d(floor32), f32, {10});
  verify_and_record("leaderless 2x", compile_1d_leaderless(dbl), fdbl, {8});
  verify_and_record("leaderless floor(3x/2)", compile_1d_leaderless(floor32),
                    f32, {8});

  bool rejected = false;
  try {
    compile_1d_leaderless(min1x);
  } catch (const std::invalid_argument& e) {
    rejected = true;
    REQUIRE_MSG(std::string(e.what()).find("f(1) + f(1) > f(2)") !=
                    std::string::npos,
                "the rejection must name the witness pair, got: " << e.what());
  }
  REQUIRE_MSG(rejected, "compile_1d_leaderless must reject min(1,x)");
  auto pair = superadditive_check(min1x, 8);
  REQUIRE(pair.has_value());
  REQUIRE(pair->first == 1 && pair->second == 1);

  return "eventual form extracted; leadered networks verified on 0..10, "
         "leaderless on 0..8, min(1,x) rejected with witness (1,1)";
}

// --- criterion 6: composition and the shadow transform ---------------------

std::string criterion6() {
  Crn mn = parse_crn(kMinText);
  Crn down = parse_crn("inputs: W\noutput: Y\nW -> 2 Y\n");

  std::string warning;
  Crn chain = concatenate(mn, down, &warning);
  REQUIRE_MSG(warning.empty(),
              "min is output-oblivious, no warning expected: " << warning);
  PointFn f_2min = [](const std::vector<long long>& x) {
    return 2 * std::min(x[0], x[1]);
  };
  verify_and_record("min then doubling", chain, f_2min, {3, 3});

  Crn catalyst = parse_crn("inputs: X\noutput: Y\nX -> Y\nX + Y -> 2 Y\n");
  REQUIRE(is_output_monotonic(catalyst));
  REQUIRE(!is_output_oblivious(catalyst));
  Crn shadow = monotonic_to_oblivious(catalyst);
  REQUIRE(is_output_oblivious(shadow));
  PointFn ident = [](const std::vector<long long>& x) { return x[0]; };
  verify_and_record("shadowed catalyst", shadow, ident, {6});

  std::string direct_warning;
  concatenate(catalyst, down, &direct_warning);
  REQUIRE_MSG(!direct_warning.empty(),
              "concatenating the untransformed catalyst network must warn");

  std::string chain_warning;
  Crn chain2 = concatenate(shadow, down, &chain_warning);
  REQUIRE(chain_warning.empty());
  PointFn f_dbl = [](const std::vector<long long>& x) { return 2 * x[0]; };
  verify_and_record("shadowed catalyst then doubling", chain2, f_dbl, {5});

  return "compositions verified on (3,3) / 0..5; the shadow transform keeps "
         "the window behavior and silences the obliviousness warning";
}

// --- criterion 7: randomized property suites -------------------------------

std::string criterion7() {
  constexpr int kCases = 1000;

  {  // A ->* B implies A + C ->* B + C: replay a shortest derivation with a
     // surplus added and land on the shifted endpoint.
    std::mt19937_64 rng(901);
    Caps caps{3000, 30};
    for (int k = 0; k < kCases; ++k) {
      Crn crn = testgen::random_crn(rng, (rng() & 1) != 0);
      auto input = testgen::random_input(rng, crn.dimension(), 3);
      Configuration a = initial_configuration(crn, input);
      ReachGraph g = reachable(crn, a, caps);
      int node = static_cast<int>(rng() % g.nodes.size());
      std::vector<int> path = g.path_to(node);
      Configuration surplus(a.size(), 0);
      for (int32_t& v : surplus) v = static_cast<int32_t>(rng() % 3);
      surplus[static_cast<std::size_t>(rng() % surplus.size())] += 1;
      Configuration c = a;
      for (std::size_t s = 0; s < c.size(); ++s) c[s] += surplus[s];
      for (int ri : path) {
        const Reaction& r = crn.reactions()[static_cast<std::size_t>(ri)];
        REQUIRE_MSG(applicable(c, r),
                    "additivity: the derivation must stay applicable");
        c = apply_reaction(c, r);
      }
      Configuration want = g.nodes[static_cast<std::size_t>(node)];
      for (std::size_t s = 0; s < want.size(); ++s) want[s] += surplus[s];
      REQUIRE_MSG(c == want,
                  "additivity: the shifted derivation must land on B + C");
    }
  }

  {  // Output counts never decrease along any edge of an output-oblivious
     // reachability graph.
    std::mt19937_64 rng(902);
    Caps caps{2000, 30};
    long long edges = 0;
    for (int k = 0; k < kCases; ++k) {
      Crn crn = testgen::random_crn(rng, true);
      auto input = testgen::random_input(rng, crn.dimension(), 3);
      ReachGraph g = reachable(crn, initial_configuration(crn, input), caps);
      for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        const long long here = output_count_of(crn, g.nodes[n]);
        for (const ReachEdge& e : g.edges[n]) {
          REQUIRE_MSG(
              output_count_of(crn, g.nodes[static_cast<std::size_t>(
                                       e.target)]) >= here,
              "output must never decrease in an output-oblivious network");
          ++edges;
        }
      }
    }
    REQUIRE(edges > 1000);
  }

  {  // The same seed replays the same run, step for step.
    std::mt19937_64 rng(903);
    for (int k = 0; k < kCases; ++k) {
      Crn crn = testgen::random_crn(rng, (rng() & 1) != 0);
      auto input = testgen::random_input(rng, crn.dimension(), 4);
      const uint64_t seed = rng();
      SimResult r1 = simulate(crn, input, seed, 300);
      SimResult r2 = simulate(crn, input, seed, 300);
      REQUIRE(r1.steps.size() == r2.steps.size());
      for (std::size_t i = 0; i < r1.steps.size(); ++i) {
        REQUIRE(r1.steps[i].reaction == r2.steps[i].reaction);
        REQUIRE(r1.steps[i].y == r2.steps[i].y);
      }
      REQUIRE(r1.terminal == r2.terminal);
      REQUIRE(r1.converged == r2.converged);
    }
  }

  {  // Every refutation ships a witness trace that replays exactly.
    std::mt19937_64 rng(904);
    Caps caps{3000, 30};
    int refuted = 0;
    int iterations = 0;
    while (refuted < kCases) {
      REQUIRE_MSG(++iterations < 50000, "not enough refutations found");
      Crn crn = testgen::random_crn(rng, (rng() & 1) != 0);
      auto input = testgen::random_input(rng, crn.dimension(), 3);
      const long long expected = static_cast<long long>(rng() % 7);
      Verdict v = stably_computes(crn, input, expected, caps);
      if (v.status != VerdictStatus::Refuted) continue;
      ++refuted;
      Configuration c = initial_configuration(crn, input);
      for (const TraceStep& step : v.witness) {
        const Reaction& r =
            crn.reactions()[static_cast<std::size_t>(step.reaction)];
        REQUIRE_MSG(applicable(c, r), "the refutation witness must replay");
        c = apply_reaction(c, r);
        REQUIRE_MSG(c == step.config,
                    "replayed configurations must match the witness");
      }
    }
  }

  return "4 property suites x 1000 randomized cases (additivity, edge "
         "monotonicity, seed determinism, refutation replay)";
}

// --- criterion 8: scaling limit --------------------------------------------

std::string criterion8() {
  ObliviousSpec roof = parse_spec_json_text(slurp("roof.json"));
  std::vector<std::vector<Rational>> limit = scaling_limit(roof);
  std::vector<std::vector<Rational>> expected = {
      {Rational(0), Rational(1)},
      {Rational(1, 2), Rational(1, 2)},
      {Rational(1), Rational(0)}};
  REQUIRE_MSG(limit == expected,
              "scaling limit of roof must be {(1,0),(0,1),(1/2,1/2)}");

  const long long c = 10000;    // pinned scale
  const Rational tol(1, 1000);  // pinned tolerance
  std::mt19937_64 rng(8080);
  for (int sample = 0; sample < 20; ++sample) {
    std::vector<Rational> z(2);
    std::vector<long long> floored(2);
    for (int i = 0; i < 2; ++i) {
      const long long den = 1 + static_cast<long long>(rng() % 20);
      const long long num = static_cast<long long>(rng() % (5 * den + 1));
      z[static_cast<std::size_t>(i)] = Rational(num, den);
      floored[static_cast<std::size_t>(i)] =
          (Rational(c) * z[static_cast<std::size_t>(i)]).floor();
    }
    const Rational scaled(spec_eval(roof, floored), c);
    Rational best = limit[0][0] * z[0] + limit[0][1] * z[1];
    for (const auto& row : limit) {
      const Rational v = row[0] * z[0] + row[1] * z[1];
      if (v < best) best = v;
    }
    Rational diff = scaled - best;
    if (diff < Rational(0)) diff = Rational(0) - diff;
    REQUIRE_MSG(diff <= tol, "sampled scaling at z=(" << z[0] << "," << z[1]
                                                      << ") deviates by "
                                                      << diff);
  }

  return "scaling limit exact; 20 sampled directions within 1/1000 of the "
         "gradient min at c=10000";
}

// --- criterion 9: randomized convergence over the verified corpus ----------

std::string criterion9() {
  REQUIRE_MSG(!g_corpus.empty(),
              "no verified corpus was recorded by the earlier criteria");
  std::vector<uint64_t> seeds(100);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    seeds[i] = static_cast<uint64_t>(i + 1);
  }
  int pairs = 0;
  for (const CorpusEntry& entry : g_corpus) {
    for_each_point(entry.window, [&](const std::vector<long long>& x) {
      const long long expected = entry.fn(x);
      ConvergenceStats stats =
          convergence_stats(entry.crn, x, expected, seeds, 100000);
      REQUIRE_MSG(stats.fraction_correct >= 0.99,
                  entry.name << " at " << fmt_point(x) << ": only "
                             << stats.correct << "/" << stats.runs
                             << " runs converged to " << expected);
      ++pairs;
    });
  }
  std::ostringstream os;
  os << g_corpus.size() << " verified networks, " << pairs
     << " (network, input) pairs x 100 seeds, all >= 99% correct within "
        "100000 steps";
  return os.str();
}

struct Criterion {
  int number;
  double budget_seconds;  // 0 = no budget
  std::string (*body)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, 5.0, criterion1},  {2, 10.0, criterion2}, {3, 60.0, criterion3},
      {4, 5.0, criterion4},  {5, 30.0, criterion5}, {6, 10.0, criterion6},
      {7, 0.0, criterion7},  {8, 0.0, criterion8},  {9, 0.0, criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string summary;
    std::string failure;
    try {
      summary = c.body();
    } catch (const Failure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    char timing[64];
    if (c.budget_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", elapsed,
                    c.budget_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
    }
    if (failure.empty() && c.budget_seconds > 0 &&
        elapsed > c.budget_seconds) {
      failure = "completed but exceeded the runtime budget";
    }
    if (failure.empty()) {
      std::cout << "PASS criterion " << c.number << ": " << summary << " ("
                << timing << ")\n";
    } else {
      std::cout << "FAIL criterion " << c.number << ": " << failure << " ("
                << timing << ")\n";
      ++failures;
    }
  }
  if (failures) {
    std::cout << failures << " of 9 criteria failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
