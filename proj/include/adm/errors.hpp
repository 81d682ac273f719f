#pragma once

#include <stdexcept>
#include <string>

namespace adm {

// Error taxonomy, aligned with the CLI exit codes:
//   1 input/validation, 2 invariant not well defined, 3 precondition/regime
//   violation, 4 internal self-check failure.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

struct NotWellDefinedError : std::runtime_error {
    std::string witness_a, witness_b;  // two orderings with different values
    explicit NotWellDefinedError(const std::string& m, std::string wa = "",
                                 std::string wb = "")
        : std::runtime_error(m), witness_a(std::move(wa)), witness_b(std::move(wb)) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};

struct InternalCheckError : std::runtime_error {
    explicit InternalCheckError(const std::string& m) : std::runtime_error(m) {}
};

// Malformed input document; line is 1-based when known, 0 otherwise.
struct FormatError : std::runtime_error {
    int line = 0;
    explicit FormatError(const std::string& m, int ln = 0)
        : std::runtime_error(ln > 0 ? "line " + std::to_string(ln) + ": " + m : m),
          line(ln) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace adm
