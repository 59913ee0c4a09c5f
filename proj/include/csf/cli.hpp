#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csf::cli {

// Exit codes: 0 success, 1 verification failure, 2 no word of the
// requested length, 3 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csf::cli
