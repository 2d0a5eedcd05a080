#pragma once

#include <stdexcept>
#include <string>

namespace osint {

// A scenario file, CLI argument, or derived quantity violates a documented
// constraint. Maps to exit code 1 in the CLI.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure (missing input, unwritable output). Exit code 3.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace osint
