#include "oblivcrn/compile_1d.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "oblivcrn/gadgets.hpp"
#include "oblivcrn/quilt.hpp"
#include "oblivcrn/rational.hpp"

namespace obliv {
namespace {

// Smallest threshold from which f(x+p) = f(x) + D holds, rounded up to a
// multiple of p.  extract_eventual_1d guarantees it holds from e.n on.
long long aligned_threshold(const Semilinear1D& f, const Eventual1DForm& e) {
  long long total = 0;
  for (long long d : e.deltas) total += d;
  long long n = e.n;
  while (n > 0 && sl1d_eval(f, n - 1 + e.p) == sl1d_eval(f, n - 1) + total)
    --n;
  return ((n + e.p - 1) / e.p) * e.p;
}

void push_term(std::vector<std::pair<int64_t, std::string>>& side,
               long long coeff, const std::string& name) {
  if (coeff > 0) side.push_back({coeff, name});
}

// extract_eventual_1d reports decreasing inputs as a domain error; for the
// compilers such an input is an invalid argument.
Eventual1DForm eventual_form_for_compile(const Semilinear1D& f) {
  try {
    return extract_eventual_1d(f);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace

Crn compile_1d(const Semilinear1D& f) {
  const Eventual1DForm e = eventual_form_for_compile(f);
  const long long n = aligned_threshold(f, e);
  const long long p = e.p;

  if (n == 0) {
    // Purely periodic from zero: one piece, one walk.
    long long total = 0;
    for (long long d : e.deltas) total += d;
    Rational grad(total, p);
    std::vector<Rational> offsets;
    for (long long r = 0; r < p; ++r)
      offsets.push_back(Rational(sl1d_eval(f, r)) - grad * Rational(r));
    return compile_quilt(QuiltAffine::make({grad}, p, offsets));
  }

  auto value = [&](long long x) { return sl1d_eval(f, x); };
  auto state = [&](long long c) {
    return c < n ? "L_" + std::to_string(c)
                 : "P_" + std::to_string((c - n) % p);
  };

  std::vector<ReactionDraft> drafts;
  {
    ReactionDraft init{{{1, "L"}}, {}};
    push_term(init.rhs, value(0), "Y");
    init.rhs.push_back({1, "L_0"});
    drafts.push_back(std::move(init));
  }
  for (long long c = 0; c < n; ++c) {
    ReactionDraft step{{{1, state(c)}, {1, "X"}}, {}};
    push_term(step.rhs, value(c + 1) - value(c), "Y");
    step.rhs.push_back({1, state(c + 1)});
    drafts.push_back(std::move(step));
  }
  for (long long r = 0; r < p; ++r) {
    ReactionDraft step{{{1, "P_" + std::to_string(r)}, {1, "X"}}, {}};
    push_term(step.rhs, value(n + r + 1) - value(n + r), "Y");
    step.rhs.push_back({1, "P_" + std::to_string((r + 1) % p)});
    drafts.push_back(std::move(step));
  }

  std::vector<Species> declared = {{"X", SpeciesKind::Input, 1},
                                   {"Y", SpeciesKind::Output, 1},
                                   {"L", SpeciesKind::Leader, 0}};
  return Crn::make(declared, drafts);
}

Crn compile_1d_leaderless(const Semilinear1D& f, long long bound) {
  if (sl1d_eval(f, 0) != 0)
    throw std::invalid_argument("compile_1d_leaderless: f(0) must be 0");
  const Eventual1DForm e = eventual_form_for_compile(f);
  const long long n = aligned_threshold(f, e);
  const long long p = e.p;

  const long long horizon = std::max(bound, 2 * (n + p));
  if (auto witness = superadditive_check(f, horizon))
    throw std::invalid_argument(
        "compile_1d_leaderless: not superadditive: f(" +
        std::to_string(witness->first) + ") + f(" +
        std::to_string(witness->second) + ") > f(" +
        std::to_string(witness->first + witness->second) + ")");

  auto value = [&](long long x) { return sl1d_eval(f, x); };
  auto state = [&](long long c) {
    return c < n ? "L_" + std::to_string(c)
                 : "P_" + std::to_string((c - n) % p);
  };
  std::vector<ReactionDraft> drafts;
  {
    ReactionDraft boot{{{1, "X"}}, {}};
    push_term(boot.rhs, value(1), "Y");
    boot.rhs.push_back({1, state(1)});
    drafts.push_back(std::move(boot));
  }
  for (long long c = 1; c < n; ++c) {
    ReactionDraft step{{{1, state(c)}, {1, "X"}}, {}};
    push_term(step.rhs, value(c + 1) - value(c), "Y");
    step.rhs.push_back({1, state(c + 1)});
    drafts.push_back(std::move(step));
  }
  for (long long r = 0; r < p; ++r) {
    ReactionDraft step{{{1, "P_" + std::to_string(r)}, {1, "X"}}, {}};
    push_term(step.rhs, value(n + r + 1) - value(n + r), "Y");
    step.rhs.push_back({1, "P_" + std::to_string((r + 1) % p)});
    drafts.push_back(std::move(step));
  }

  // Merges: two states combine into the state for their summed count,
  // emitting the superadditivity surplus.  L_c holds exactly c tokens; a P
  // state stands for a whole congruence class, but with representative n+r
  // the surplus comes out the same for every member of the class.
  std::vector<long long> reps;
  for (long long c = 1; c < n; ++c) reps.push_back(c);
  for (long long r = 0; r < p; ++r) reps.push_back(n + r);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size(); ++j) {
      const long long a = reps[i], b = reps[j];
      ReactionDraft merge{{{1, state(a)}, {1, state(b)}}, {}};
      push_term(merge.rhs, value(a + b) - value(a) - value(b), "Y");
      merge.rhs.push_back({1, state(a + b)});
      drafts.push_back(std::move(merge));
    }
  }

  std::vector<Species> declared = {{"X", SpeciesKind::Input, 1},
                                   {"Y", SpeciesKind::Output, 1}};
  return Crn::make(declared, drafts);
}

}  // namespace obliv
