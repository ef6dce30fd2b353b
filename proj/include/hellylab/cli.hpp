#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hellylab {

// Command-line entry point; returns the process exit code.
//   0  success
//   1  property-false verdict (e.g. not Helly)
//   2  input error
//   3  enumeration bound exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hellylab
