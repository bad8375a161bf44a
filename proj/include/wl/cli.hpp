#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wl/core.hpp"

namespace wl {

// Input format error with the 1-based line number it occurred on.
struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& msg, int line_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Reads the matrix file format: line 1 declared color count, line 2 n, then
// n rows of n non-negative integers. The result is normalize(raw). If the
// declared count differs from the number of distinct entries, a warning goes
// to *warnings (when given) and the observed count wins.
ColorMatrix parse_input(std::istream& in, std::ostream* warnings = nullptr);

struct EmitOptions {
    bool constants = false;
};

// Deterministic text output: rank=, cells=, iterations= headers, the
// canonical-form stable matrix, and optionally one line per nonzero structure
// constant ("p <i> <j> <k> <p>", sorted by (k,i,j), ids renumbered to match
// the emitted matrix).
std::string emit_result(const StableResult& res, const EmitOptions& opt = {});

// Command dispatch: close / gen / verify / bench. Returns the exit status
// (0 success, 1 runtime or verification failure, 2 usage error).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wl
