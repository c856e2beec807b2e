#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hprop {

enum class ErrorKind {
  MalformedInput,
  NonMonotonePartition,
  EndpointViolation,
  AsymmetricValues,
  ValueOutOfRange,
  DisconnectedSkeleton,
  DimensionMismatch,
  TooLarge,
  LeftLargerThanRight,
  NotALineGraphon,
  NotTwoBlocks,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Recoverable input or precondition failure. The kind names the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hprop
