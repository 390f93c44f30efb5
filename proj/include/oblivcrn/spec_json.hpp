#pragma once

#include <string>

#include "oblivcrn/semilinear1d.hpp"
#include "oblivcrn/spec.hpp"

namespace obliv {

// JSON exchange format for function specs.  Parsing is strict: unknown or
// missing fields, wrong types, incomplete offsets tables and inconsistent
// nesting are rejected with SpecJsonError.
//
// ObliviousSpec document:
//   {
//     "dimension": 2,
//     "floor": [1, 0],
//     "pieces": [
//       {"gradient": ["1/2", "1/2"], "period": 2,
//        "offsets": {"0,0": "0", "1,0": "1/2", "0,1": "1/2", "1,1": "0"}}
//     ],
//     "restrictions": [
//       {"axis": 1, "value": 0, "spec": { ... same shape ... }}
//     ]
//   }
// Rationals are lowest-terms strings ("3/2", "-1/2", "7"); plain JSON
// integers are also accepted.  Offsets keys are comma-joined congruence
// tuples with one entry per dimension ("" for dimension 0).  The
// "restrictions" field may be omitted when the table is empty.
//
// Semilinear1D document:
//   {"pieces": [{"lo": 1, "alpha": "0", "beta": "1"},
//               {"hi": 1, "alpha": "0", "beta": "0"},
//               {"mod": [2, 1], "alpha": "3/2", "beta": "-1/2"}]}
// "lo" defaults to 0; "hi" (exclusive) and "mod" ([modulus, residue]) are
// optional.

struct SpecJsonError : std::runtime_error {
  explicit SpecJsonError(const std::string& msg) : std::runtime_error(msg) {}
};

ObliviousSpec parse_spec_json_text(const std::string& text);
std::string spec_to_json_text(const ObliviousSpec& s, int indent = 2);

Semilinear1D parse_sl1d_json_text(const std::string& text);
std::string sl1d_to_json_text(const Semilinear1D& f, int indent = 2);

}  // namespace obliv
