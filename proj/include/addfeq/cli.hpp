#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace addfeq {

// Runs a full CLI invocation (without the program name). Returns the exit
// code: 0 on success, 1 on input or parse errors, 2 when an internal
// self-check failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace addfeq
