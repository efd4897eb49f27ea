#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knot {

/// args[0] is the program name. Returns 0 on success, 1 on a domain error
/// (its name printed to `err`) or a failed verify line, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knot
