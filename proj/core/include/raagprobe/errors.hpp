#pragma once

#include <stdexcept>
#include <string>

namespace raagprobe {

// Invalid experiment/CLI configuration. Maps to process exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph text input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line),
          message_(message) {}

    int line() const { return line_; }
    const std::string& message() const { return message_; }  // without the line prefix

private:
    int line_;
    std::string message_;
};

}
