#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obliv {

// The full command-line surface as a library call.  `args` excludes the
// program name.  Returns the process exit code: 0 success/verified,
// 1 refuted or validation failure, 2 usage or parse error, 3 capped.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace obliv
