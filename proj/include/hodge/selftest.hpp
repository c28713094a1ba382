#pragma once

#include <iosfwd>

namespace hodge {

// Runs the full acceptance suite, printing one pass/fail line per
// criterion.  Returns true when every criterion passes.
bool run_acceptance(std::ostream& os);

}  // namespace hodge
