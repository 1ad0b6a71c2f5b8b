#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stringnet {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsideContour : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProjectionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<std::string> violations_in)
      : std::runtime_error(join(violations_in)), violations(std::move(violations_in)) {}

  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "scenario validation failed:";
    for (const auto& s : v) {
      out += "\n  - " + s;
    }
    return out;
  }
};

}  // namespace stringnet
