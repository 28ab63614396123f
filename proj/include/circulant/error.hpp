#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circulant {

enum class Errc {
  InvalidOrder,
  EmptySet,
  ContainsZero,
  NotSymmetric,
  NotADivisor,
  IndexOutOfRange,
  NotPowerOfTwo,
  RatioTooSmall,
  VertexOutOfRange,
  OrderTooLarge,
  OrderMismatch,
  SetsNotDisjoint,
  LengthMismatch,
  EmptyRange,
  RangeTooLarge,
  EmptyRecords,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace circulant
