#pragma once

#include <stdexcept>
#include <string>

namespace dhp {

// Malformed instance text. line/column are 1-based; 0 means unknown.
struct parse_error : std::runtime_error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int line_ = 0, int column_ = 0)
        : std::runtime_error(msg), line(line_), column(column_) {}
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematically guaranteed outcome failed to materialize. Treated as a
// bug signal until proven otherwise; maps to its own process exit code.
struct contradiction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dhp
