#pragma once

#include <iosfwd>

namespace bfwave {

// Runs the twelve-point validation suite, printing one PASS/FAIL line per
// criterion with the measured quantities, then a summary line.  Returns the
// number of failed criteria.  A criterion that throws is reported as a
// failure with the exception text; it never aborts the remaining ones.
int run_acceptance(std::ostream& out);

}  // namespace bfwave
