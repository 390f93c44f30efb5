#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace obliv {

using PointFn = std::function<long long(const std::vector<long long>&)>;

// Evidence that a function cannot be an eventual min of quilt-affine
// pieces.  Such a function has, along every arithmetic family of points
// a_i = base + (i-1)*direction with probes j*delta_direction, increments
// that eventually stop growing; a family where the increment strictly grows
// between every pair of its members (lhs > rhs below, for all pairs) rules
// the structure out.  The reported pair is the first two members.
struct DicksonWitness {
  std::vector<long long> base, direction, delta_direction;
  int family_size = 0;
  std::vector<long long> a1, a2, delta;  // delta = 2 * delta_direction
  long long lhs = 0, rhs = 0;            // f(a1+delta)-f(a1) vs f(a2+delta)-f(a2)
};

// Search bases and directions with entries in [0,bound], evaluating f on
// [0,2*bound]^dim only.  A family counts when it has at least `min_family`
// members inside that box and the strict-growth violation holds for every
// pair.  Returns the lexicographically first witness, or nullopt.
std::optional<DicksonWitness> dickson_search(const PointFn& f, int dim,
                                             long long bound,
                                             int min_family = 4);

std::string witness_text(const DicksonWitness& w);

}  // namespace obliv
