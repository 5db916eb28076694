#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parfima::cli {

/// Runs one CLI invocation. args excludes the program name. Data goes to
/// `out` (or to the --out file, with a `<file>.json` metadata sidecar);
/// failures print a single `error: <kind>: <message>` line to `err`.
///
/// Exit status: 0 success, 1 library error, 2 usage error, 3 unexpected.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parfima::cli
