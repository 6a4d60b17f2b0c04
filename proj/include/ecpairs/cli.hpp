#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ecpairs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNotFound = 2;

/// Runs one command line (argv[0] is the program name; the vector form
/// takes the arguments after it).  Payload goes to
/// `out`, diagnostics and usage to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecpairs::cli
