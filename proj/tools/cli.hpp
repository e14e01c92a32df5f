#ifndef PICLOC_TOOLS_CLI_HPP
#define PICLOC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace picloc::cli {

enum ExitCode
{
    Success = 0,
    DomainFailure = 1,
    InputFailure = 2,
    InternalFailure = 3,
};

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace picloc::cli

#endif
