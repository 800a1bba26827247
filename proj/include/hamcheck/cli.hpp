#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamcheck {

/// Exit codes: 0 all requested verdicts pass, 1 some fail, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hamcheck
