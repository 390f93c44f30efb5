#pragma once

#include <span>
#include <string>
#include <vector>

#include "oblivcrn/rational.hpp"

namespace obliv {

// Piecewise-affine function with periodic offsets ("quilt"):
//
//   g(x) = gradient . x + offsets(x mod period)
//
// over x in N^d, with nonnegative rational gradient and a total offsets
// table over (Z/pZ)^d.  Valid quilts are integer-valued with nonnegative
// integer finite differences
//
//   delta_i(c) = gradient(i) + offsets(c + e_i) - offsets(c).
struct QuiltAffine {
  int dim = 0;                    // d >= 0
  std::vector<Rational> gradient; // size d
  long long period = 1;           // p >= 1
  std::vector<Rational> offsets;  // size p^d, index = sum c(i) * p^i

  // Throws std::invalid_argument on structural problems (sizes, p < 1,
  // table too large).  Value-level problems are quilt_validate's job.
  static QuiltAffine make(std::vector<Rational> gradient, long long period,
                          std::vector<Rational> offsets);

  long long table_size() const { return static_cast<long long>(offsets.size()); }
  long long class_index(std::span<const long long> cls) const;
  const Rational& offset_at(std::span<const long long> cls) const;
};

// Exact value; throws std::domain_error when the value is not an integer
// and std::invalid_argument on dimension mismatch or negative coordinates.
long long quilt_eval(const QuiltAffine& g, std::span<const long long> x);
Rational quilt_eval_exact(const QuiltAffine& g, std::span<const long long> x);

// Finite difference along `axis` (1-based) from congruence class `cls`.
// Throws std::domain_error when not an integer.
long long quilt_delta(const QuiltAffine& g, std::span<const long long> cls, int axis);

struct QuiltReport {
  bool ok = true;
  std::string detail;  // human-readable witness when !ok
};

// Checks gradient >= 0, integer values on class representatives, and
// integer nonnegative finite differences everywhere.
QuiltReport quilt_validate(const QuiltAffine& g);

// h(y) = g(y + shift), as a quilt with the same period (offsets re-based by
// the class shift).
QuiltAffine quilt_shift(const QuiltAffine& g, std::span<const long long> shift);

// Pin coordinate `axis` (1-based) to `value`, producing a quilt of
// dimension d-1 over the remaining axes.
QuiltAffine quilt_substitute(const QuiltAffine& g, int axis, long long value);

// Axes (1-based) on which g actually depends: nonzero gradient component or
// offsets varying along the axis.
std::vector<int> quilt_dependent_axes(const QuiltAffine& g);

// Keep only the listed axes (which must include every dependent axis).
QuiltAffine quilt_project(const QuiltAffine& g, const std::vector<int>& axes);

// Enumerate all congruence classes of (Z/pZ)^d in index order.
std::vector<std::vector<long long>> quilt_classes(const QuiltAffine& g);

}  // namespace obliv
