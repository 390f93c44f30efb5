#pragma once

#include <set>
#include <string>

#include "oblivcrn/crn.hpp"

namespace obliv {

// Rename every species not in `keep` to "<prefix>::<name>".
Crn namespace_crn(const Crn& crn, const std::string& prefix, const std::set<std::string>& keep);

// Sequential composition: the upstream output species is identified with the
// downstream input species, upstream species move to the "f::" namespace and
// downstream species to "g::", composite inputs/output stay in the root
// namespace.  When either side declares a leader a fresh global leader L is
// added with a single reaction releasing the per-side leaders (present sides
// only).  Preconditions: downstream has exactly one input, both sides have
// exactly one output.  If the upstream network is not output-oblivious the
// composition is still built but *warning is set (the composite may not
// stably compute the composed function).
Crn concatenate(const Crn& upstream, const Crn& downstream, std::string* warning = nullptr);

// For an output-monotonic network, replace every use of the output Y as a
// catalyst by a fresh species Z that is produced alongside Y: each reaction
// consuming k copies of Y consumes k copies of Z instead, and each reaction
// with net Y production q adds q copies of Z to its products.  Networks that
// are already output-oblivious are returned unchanged.  Throws
// std::invalid_argument when the network is not output-monotonic.
Crn monotonic_to_oblivious(const Crn& crn);

}  // namespace obliv
