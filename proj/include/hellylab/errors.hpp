#pragma once

#include <stdexcept>
#include <string>

namespace hellylab {

// Malformed or rejected input (parse failures, invalid metrics/graphs,
// bad automorphisms, windows too small). CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration bound would be exceeded. CLI maps this to exit code 3.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotHellyError : InputError {
    explicit NotHellyError(const std::string& what) : InputError(what) {}
};

// Hard enumeration defaults. `--bound` may lower them; raising above the
// default requires --unsafe-raise on the CLI.
struct Bounds {
    static constexpr int tight_span = 10;   // points in a metric space
    static constexpr int hull = 12;         // graph vertices for hull enumeration
    static constexpr int brute_helly = 8;   // graph vertices for brute-force Helly search
    static constexpr int garside_radius = 3;
    static constexpr int subdivision = 24;  // (2*N!)*|V|
};

}  // namespace hellylab
