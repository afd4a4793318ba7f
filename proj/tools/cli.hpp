#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geolang::cli {

  // Runs one command line (without the program name). Returns the exit code:
  // 0 success, 1 refuted, 2 input error, 3 resource cap.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace geolang::cli
