#pragma once

#include "oblivcrn/crn.hpp"
#include "oblivcrn/semilinear1d.hpp"

namespace obliv {

// Compile a nondecreasing one-dimensional function into a leadered
// output-oblivious network.  The leader walks the prefix states L_0..L_{n-1}
// emitting each increment f(i+1)-f(i), then cycles through the periodic
// states P_0..P_{p-1} emitting the per-class increments.  The prefix length
// is the smallest threshold from which the increments are periodic, rounded
// up to a multiple of the period; when it reaches zero the function is a
// single piece and compiles to a plain piece walk.
//
// Throws std::invalid_argument if f is not nondecreasing.
Crn compile_1d(const Semilinear1D& f);

// Compile without a leader.  Requires f(0) = 0 and superadditivity
// (f(x) + f(y) <= f(x+y)); any two in-flight states can then merge while
// emitting the correction f(i+j) - f(i) - f(j).  Superadditivity is checked
// exhaustively up to max(bound, 2*(n+p)); a violation throws
// std::invalid_argument naming the witness pair.
Crn compile_1d_leaderless(const Semilinear1D& f, long long bound = 0);

}  // namespace obliv
