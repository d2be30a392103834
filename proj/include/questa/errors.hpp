#pragma once

#include <stdexcept>
#include <string>

namespace questa {

// Error categories map 1:1 onto process exit codes (0 success, 2 config, 3 runtime).
enum class ErrorKind : int {
    Config = 2,
    Runtime = 3,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& message) : Error(ErrorKind::Config, message) {}
};

struct RuntimeFailure : Error {
    explicit RuntimeFailure(const std::string& message) : Error(ErrorKind::Runtime, message) {}
};

}  // namespace questa
