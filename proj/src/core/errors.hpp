#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace monomtest {

enum class ErrorKind {
    Context,          // mismatched ring contexts
    DegenerateInput,  // e.g. leading term of the zero polynomial
    Contract,         // operation precondition violated
    Resource,         // time / system-count / enumeration bound exceeded
    Parse,            // malformed input text
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ResourceError : public Error {
public:
    // status is the run-report word: "timeout" or "oom"
    ResourceError(std::string status, std::string msg)
        : Error(ErrorKind::Resource, std::move(msg)), status_(std::move(status)) {}

    const std::string& status() const { return status_; }

private:
    std::string status_;
};

class ParseError : public Error {
public:
    ParseError(int line, int col, std::string msg)
        : Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace monomtest
