#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uncrossing {

enum class Errc {
  NotTwice,
  NotNormalized,
  BadSyntax,
  NotCrossing,
  NotComparable,
  NotAChain,
  NotGraded,
  TooLarge,
  TooManyChains,
  StartSetMismatch,
  NotPhylogenetic,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotTwice: return "NotTwice";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::BadSyntax: return "BadSyntax";
    case Errc::NotCrossing: return "NotCrossing";
    case Errc::NotComparable: return "NotComparable";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotGraded: return "NotGraded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooManyChains: return "TooManyChains";
    case Errc::StartSetMismatch: return "StartSetMismatch";
    case Errc::NotPhylogenetic: return "NotPhylogenetic";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace uncrossing
