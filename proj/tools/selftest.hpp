#pragma once

#include <ostream>

namespace intdecomp::selftest {

// Runs the built-in golden vectors plus a seeded randomized slice, writing
// one line per check. Returns the number of failures.
int run(unsigned long seed, std::ostream &out);

} // namespace intdecomp::selftest
