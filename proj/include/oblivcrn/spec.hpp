#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oblivcrn/quilt.hpp"

namespace obliv {

// Declarative description of a nondecreasing function N^d -> N that is an
// eventual min of quilt-affine pieces: for x >= floor (componentwise on free
// axes) the value is min_k g_k(x); below the floor the value is delegated to
// a restriction spec with one more axis pinned.  Restrictions are total: one
// nested spec per free axis i and value j in 0..floor(i)-1.  All nested
// specs share the ambient dimension; pinned coordinates are tracked in
// `fixed`.
class ObliviousSpec {
public:
  struct Restriction {
    int axis = 0;               // 1-based
    long long value = 0;        // pinned coordinate
    std::shared_ptr<const ObliviousSpec> spec;
  };

  // Validates structure (sizes, floor zero on fixed axes, total restriction
  // table, consistent nesting); value-level properties are spec_validate's
  // job.  Throws std::invalid_argument.
  static ObliviousSpec make(int dim, std::vector<long long> floor,
                            std::vector<QuiltAffine> pieces,
                            std::vector<Restriction> restrictions,
                            std::vector<std::pair<int, long long>> fixed = {});

  int dim() const { return dim_; }
  const std::vector<long long>& floor() const { return floor_; }
  const std::vector<QuiltAffine>& pieces() const { return pieces_; }
  const std::vector<Restriction>& restrictions() const { return restrictions_; }
  const std::vector<std::pair<int, long long>>& fixed() const { return fixed_; }

  bool is_fixed(int axis) const;
  std::vector<int> free_axes() const;
  const ObliviousSpec& restriction(int axis, long long value) const;

private:
  int dim_ = 0;
  std::vector<long long> floor_;
  std::vector<QuiltAffine> pieces_;
  std::vector<Restriction> restrictions_;
  std::vector<std::pair<int, long long>> fixed_;
};

// Exact evaluation via the recursive definition; recursion descends through
// the smallest free axis below the floor.  Throws std::invalid_argument when
// x violates the pinned coordinates and std::domain_error when the piece
// minimum is negative.
long long spec_eval(const ObliviousSpec& s, std::span<const long long> x);

struct SpecReport {
  bool ok = true;
  std::string detail;
};

// Window checks: nondecreasing per free axis, agreement of all admissible
// recursion orders, per-piece quilt validity, piece dominance at every
// window point (below the floor the value comes from a restriction, and a
// piece must not undercut it), nonnegative values.  window 0 selects the
// default (max floor + 2 * lcm of periods, over all nested specs).
SpecReport spec_validate(const ObliviousSpec& s, long long window = 0);

long long default_validation_window(const ObliviousSpec& s);

// Gradients of the top-level pieces, deduplicated and sorted; this is the
// limit of f(floor(c z)) / c for c -> infinity on each linear cone.
std::vector<std::vector<Rational>> scaling_limit(const ObliviousSpec& s);

// Helpers for compilation: the spec seen as a function of its free axes
// only, with pinned coordinates substituted into the pieces.
std::vector<QuiltAffine> effective_pieces(const ObliviousSpec& s);
std::vector<long long> effective_floor(const ObliviousSpec& s);

}  // namespace obliv
