#pragma once

#include <stdexcept>
#include <string>

namespace isa {

/// Invalid arguments, broken type invariants, bad configs. CLI exit code 2.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File and serialization problems (missing file, bad magic, malformed rows). CLI exit code 3.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Runtime numerical contract failures (magnitude floor, insufficient grid support). CLI exit code 4.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace isa
