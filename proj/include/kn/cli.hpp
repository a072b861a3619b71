#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kn {

// Command dispatch behind the kntab binary. Returns 0 on success, 1 on a
// domain error (invalid tableau, failed precondition), 2 on a usage error.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace kn
