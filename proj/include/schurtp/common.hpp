#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace schurtp {

/// Exact arbitrary-precision integer used for every coefficient in the library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used only for intermediate scales (e.g. the 2^{-C(q,2)}
/// prefactor of the corank formula).
using Rat = boost::multiprecision::cpp_rational;

/// Library error with a stable machine-readable code.
///
/// Codes used across the library: SyntaxError, UnknownBundle, DegreeOverflow,
/// BoxOverflow, BoxTooSmall, RankMismatch, RingMismatch, RankOrder,
/// InsufficientDegrees, NotSupersymmetric, NonIntegralResult,
/// CorankExceedsRank, LengthOverflow, InvalidPartition, InvalidArgument.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(std::move(code)), position_(position) {}

  const std::string& code() const noexcept { return code_; }

  /// Byte offset into the source text, present for parser errors only.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  std::string code_;
  std::optional<std::size_t> position_;
};

inline Int binomial(const Int& top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  Int result = 1;
  for (long step = 1; step <= bottom; ++step) {
    result *= top - bottom + step;
    result /= step;  // exact: product of k consecutive integers is divisible by k!
  }
  return result;
}

}  // namespace schurtp
