#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwlat::cli {

// Dispatches one command-line request and writes a single JSON document
// (or, with --pretty, a human-readable table) to `out`. Returns the
// process exit code: 0 success, 2 validation or parse error, 3 bounded
// search exhausted without a result.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mwlat::cli
