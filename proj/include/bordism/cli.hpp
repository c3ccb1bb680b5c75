#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bordism {

/// Batch front end. Exit status: 0 success / realizable, 1 certified negative
/// verdict or failed catalog, 2 usage, parse or precision error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bordism
