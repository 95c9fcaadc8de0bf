#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moufang {

/// A point left the domain of a chart, or a primitive (sqrt) was evaluated
/// outside its smooth range. Carries the offending evaluation point when known.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what, std::vector<double> point = {})
      : std::domain_error(what + format_point(point)), point_(std::move(point)) {}

  const std::vector<double>& point() const { return point_; }

 private:
  static std::string format_point(const std::vector<double>& p);

  std::vector<double> point_;
};

/// Malformed loop-spec strings, bad flags, inconsistent arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace moufang
