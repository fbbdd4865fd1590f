#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leafine::cli {

// Full command-line entry point, callable in-process. `args` excludes the
// program name. Returns the process exit code: 0 success, 1 verification
// failure, 2 usage or input error, 3 resource cap hit. All diagnostics go
// to `err` with an `error:<name>:` prefix; data goes to `out` only.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace leafine::cli
