#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recon {

// Entry point behind the `recon` executable. `args` excludes the program
// name. Exit codes: 0 success, 1 check failed or internal error,
// 2 hypothesis violation, 3 cap exceeded, 4 parse error. Errors are written
// to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recon
