#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace salience {

enum class Errc {
  MissingMenu,
  NonMemberChoice,
  DuplicateMenu,
  InvalidGround,
  GroundTooLarge,
  ParseError,
  NotASwitch,
  NotExtendable,
  EmptyMax,
  NotRls,
  InternalContractBreach,
  TooSmall,
  UnsupportedN,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `line()` is nonzero only for
/// errors that originate in a choice file.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int line = 0);

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  Errc code_;
  int line_;
};

}  // namespace salience
