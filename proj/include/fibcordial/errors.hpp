#pragma once

#include <stdexcept>
#include <string>

namespace fibcordial {

struct ParameterOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AnchorNotFound : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnlabeledVertex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CapacityViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed graph/labeling file. `path` is a JSON-pointer-like location
/// such as "$.edges[3][1]".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace fibcordial
