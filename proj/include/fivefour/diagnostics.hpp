#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fivefour {

// Bad input data (malformed slice, wrong roster size, ...). The CLI maps this to exit code 1.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad configuration (missing column, unreadable path, invalid flag). Exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Collects non-fatal warnings produced while running the pipeline.
struct Diagnostics {
    std::vector<std::string> warnings;

    void warn(std::string message) { warnings.push_back(std::move(message)); }
    bool empty() const { return warnings.empty(); }
};

inline void warn(Diagnostics* diag, std::string message) {
    if (diag != nullptr) {
        diag->warn(std::move(message));
    }
}

}  // namespace fivefour
