#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ldc {

enum class errc {
  invalid_argument,
  integral_power_of_base,
  rational_power_of_base,
  base_not_squarefree,
  base_too_small,
  block_longer_than_prefix,
  prefix_too_short,
  convergence_budget_exceeded,
  parse_mismatch,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::integral_power_of_base: return "IntegralPowerOfBase";
    case errc::rational_power_of_base: return "RationalPowerOfBase";
    case errc::base_not_squarefree: return "BaseNotSquarefree";
    case errc::base_too_small: return "BaseTooSmall";
    case errc::block_longer_than_prefix: return "BlockLongerThanPrefix";
    case errc::prefix_too_short: return "PrefixTooShort";
    case errc::convergence_budget_exceeded: return "ConvergenceBudgetExceeded";
    case errc::parse_mismatch: return "ParseMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised by the block parser; offset is the index of the first digit that fits no block.
class parse_mismatch_error : public error {
 public:
  parse_mismatch_error(std::size_t offset, const std::string& what)
      : error(errc::parse_mismatch, what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ldc
