#pragma once

#include <string>
#include <vector>

#include "oblivcrn/crn.hpp"
#include "oblivcrn/quilt.hpp"

namespace obliv {

// Small reusable output-oblivious networks.  Each gadget is also emitted
// inline (with custom species names) by the spec compiler.

// min(x1,...,xk): the single reaction X1 + ... + Xk -> Y.
Crn compile_min(int k);

// Componentwise (x_i - n)+ : reactions (n+1)Xi -> nXi + Yi, outputs Y1..Yd.
Crn compile_truncate(long long n, int d);

// m independent copies of each input: Xi -> Xi^1 + ... + Xi^m.
Crn compile_fanout(int m, int d);

// c(a, b, x) = a + [x(axis) > j] * b with inputs A, B, X1..Xd:
// A -> Y and (j+1) X_axis + B -> (j+1) X_axis + Y (the X's act as catalysts).
Crn compile_indicator(int axis, long long j, int d);

// Leader-walk network for a valid nonnegative quilt-affine g:
//   L -> g(0) Y + L_0
//   L_c + X_i -> delta_i(c) Y + L_{c+e_i}     for every class c and axis i
// Exactly 1 + d * p^d reactions.  Throws std::invalid_argument when g fails
// quilt_validate or takes a negative value.
Crn compile_quilt(const QuiltAffine& g);

// Name scheme for an inlined leader walk.
struct QuiltNames {
  std::vector<std::string> inputs;  // one per axis of g
  std::string output;
  std::string state_prefix;         // class state names are prefix + "0,1"
};

// Appends the walk reactions (everything except the initial leader
// reaction) to drafts and returns the initial reaction's products
// (g(0) * output plus the start state), for fusion into a leader cascade.
std::vector<std::pair<int64_t, std::string>> emit_quilt_walk(const QuiltAffine& g,
                                                             const QuiltNames& names,
                                                             std::vector<ReactionDraft>& drafts);

std::string class_suffix(std::span<const long long> cls);

}  // namespace obliv
