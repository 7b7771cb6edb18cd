#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xhtpy {

// Exit codes: 0 success, 1 an asserted claim failed, 2 usage or input
// error, 3 a search budget ran out. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xhtpy
