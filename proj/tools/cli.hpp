// cli.hpp — command-line front end, callable in-process for tests

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcq::cli {

enum ExitCode : int {
    ok = 0,
    config_error = 2,
    numerical_error = 3,
    io_error = 4,
};

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jcq::cli
