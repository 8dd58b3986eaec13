#pragma once

#include <stdexcept>
#include <string>

namespace addfeq {

// Bad user input (CLI args, DSL text, out-of-range requests). Exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant (self-check failed). Exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require_input(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline void check_invariant(bool cond, const std::string& msg) {
    if (!cond) throw internal_error("invariant violated: " + msg);
}

} // namespace addfeq
