#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace djring::cli {

// Exit status: 0 success (Constant or Balanced for `classify`, pass for
// `verify`), 2 Biased verdict from `classify`, 1 any error or failed check.
int run_cli(int argc, char** argv);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

// argv[0] included.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace djring::cli
