#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace walklab {

// args excludes the program name. Returns 0 on success, 1 when a check fails,
// 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walklab
