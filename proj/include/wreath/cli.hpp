// Command-line front end. run() parses a tokenized argument list, executes
// one subcommand, and reports through the supplied streams so tests can drive
// it without a process boundary.
//
// Exit codes: 0 success or all checks passed, 1 a check failed, 2 usage or
// input error. Reports go to out; diagnostics and timings go to err.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wreath::cli {

struct RunConfig {
    std::string group_spec;        // name, name:param, or @table-file
    int level = 0;
    bool compare = false;          // brute: also check against the construction
    int workers = 0;               // brute: 0 = runtime default
    std::string out_path;          // manifest destination where applicable
    uint32_t max_degree = 4096;
    int max_aut_order = 24;
};

// Subcommands: build, order, normalizer, verify, brute, sylow, export.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli
