#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antipath
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int finding = 1;      // counterexample or research event
        inline constexpr int usage = 2;
        inline constexpr int resource = 3;     // I/O failure or resource guard
    }

    /// Runs the command line `antipath <args...>`. args excludes the program
    /// name. Graphs without --input or --code are read from in.
    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
