#pragma once
// Fast per-module invariant suites behind the CLI --self-test flag.

#include <string>

namespace ladder::selftest {

// Runs one module's suite ("specialfn", "potentials", "quadrature",
// "kernels", "jack", "wavefunctions") or, for "all", every suite.  Prints
// one line per check; returns the number of failed checks.
int run(const std::string& module, bool verbose);

}  // namespace ladder::selftest
