#include "salience/error.hpp"

namespace salience {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MissingMenu: return "MissingMenu";
    case Errc::NonMemberChoice: return "NonMemberChoice";
    case Errc::DuplicateMenu: return "DuplicateMenu";
    case Errc::InvalidGround: return "InvalidGround";
    case Errc::GroundTooLarge: return "GroundTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::NotASwitch: return "NotASwitch";
    case Errc::NotExtendable: return "NotExtendable";
    case Errc::EmptyMax: return "EmptyMax";
    case Errc::NotRls: return "NotRls";
    case Errc::InternalContractBreach: return "InternalContractBreach";
    case Errc::TooSmall: return "TooSmall";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
std::string decorate(Errc code, const std::string& message, int line) {
  std::string s(to_string(code));
  if (line > 0) s += " at line " + std::to_string(line);
  s += ": ";
  s += message;
  return s;
}
}  // namespace

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace salience
