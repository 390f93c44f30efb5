#include "oblivcrn/compile_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oblivcrn/spec_json.hpp"
#include "oblivcrn/verify.hpp"

using namespace obliv;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ObliviousSpec load(const std::string& name) {
  return parse_spec_json_text(slurp(std::string(TEST_DATA_DIR) + "/" + name));
}

}  // namespace

TEST_CASE("the one-dimensional threshold spec compiles to a small gated network") {
  ObliviousSpec spec = load("min1x.json");
  Crn crn = compile_spec(spec);
  CHECK(crn.dimension() == 1);
  CHECK(crn.species(crn.input_position(1)).name == "X");
  CHECK(crn.has_leader());
  CHECK(is_output_oblivious(crn));
  // Identity elision leaves: leader delivery, the catalytic gate, the
  // restriction pass-through and the final min.
  CHECK(crn.reactions().size() == 4);

  WindowReport report = verify_window(crn, spec, 6);
  CHECK(report.status == VerdictStatus::Verified);
  CHECK(report.results.size() == 7);
}

TEST_CASE("the roof spec compiles to fanned-out piece walks joined by a min") {
  ObliviousSpec spec = load("roof.json");
  Crn crn = compile_spec(spec);
  CHECK(crn.dimension() == 2);
  CHECK(crn.species(crn.input_position(1)).name == "X1");
  CHECK(is_output_oblivious(crn));
  // 2 fan-outs + 1 + 1 + 8 walk reactions + 1 min + 2 leader cascade.
  CHECK(crn.reactions().size() == 15);

  WindowReport report = verify_window(crn, spec, 3);
  CHECK(report.status == VerdictStatus::Verified);
  for (const auto& r : report.results)
    CHECK(r.verdict.status == VerdictStatus::Verified);
}

TEST_CASE("nested restrictions compile and verify") {
  ObliviousSpec spec = load("min3.json");
  Crn crn = compile_spec(spec);
  CHECK(is_output_oblivious(crn));
  // The doubly-nested network interleaves heavily: the closure has 1.3e2 /
  // 2.9e4 / 2.4e6 nodes at (1,1) / (2,2) / (3,3), so window 2 is the
  // largest exhaustive check that stays desk-scale.
  WindowReport report = verify_window(crn, spec, 2);
  CHECK(report.status == VerdictStatus::Verified);
}

TEST_CASE("compiled networks deliver every initial token through one cascade") {
  // Exactly one reaction consumes the leader, and no reaction produces it.
  for (const char* name : {"min1x.json", "roof.json", "min3.json"}) {
    Crn crn = compile_spec(load(name));
    REQUIRE(crn.has_leader());
    int consuming = 0;
    for (const auto& r : crn.reactions()) {
      CHECK(r.products[crn.leader_position()] == 0);
      if (r.reactants[crn.leader_position()] > 0) ++consuming;
    }
    CHECK(consuming == 1);
  }
}

TEST_CASE("compilation is deterministic") {
  ObliviousSpec spec = load("roof.json");
  CHECK(compile_spec(spec) == compile_spec(spec));
}

TEST_CASE("specs failing value validation are rejected") {
  ObliviousSpec bad = load("bad-dominance.json");
  CHECK_THROWS_AS(compile_spec(bad), std::invalid_argument);
}

TEST_CASE("a spec with no floor anywhere needs no indicators") {
  ObliviousSpec roof = load("roof.json");
  Crn crn = compile_spec(roof);
  // No restriction terms: every species belongs to the single pipeline.
  for (int i = 0; i < crn.species_count(); ++i) {
    CHECK(crn.species(i).name.find("r1_") == std::string::npos);
    CHECK(crn.species(i).name.find("ind") == std::string::npos);
  }
}

TEST_CASE("the assembled network realizes the eventual-min recursion") {
  // Check the compiled output against the recursion evaluated directly,
  // on points past the validation window too.
  ObliviousSpec spec = load("min1x.json");
  Crn crn = compile_spec(spec);
  auto ref = [&](const std::vector<long long>& x) { return spec_eval(spec, x); };
  WindowReport report = verify_window(crn, ref, 9);
  CHECK(report.status == VerdictStatus::Verified);
}
