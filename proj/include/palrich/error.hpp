#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace palrich {

enum class Errc {
  kParseError,
  kInvalidArgument,
  kNotProlongable,
  kImageTooSlow,
  kEmptyBlock,
  kDirectiveExhausted,
  kWordTooShort,
  kOutOfRange,
  kFactorAbsent,
  kSingleOccurrence,
  kNoOccurrenceData,
  kPalindromicInput,
  kNotAWalk,
  kNoSpecialVertices,
  kUnstableIndex,
  kNotApplicable,
  kNotAPalindrome,
  kWindowTooShort,
  kStabilizationFailed,
  kTooLarge,
  kUnsupportedAlphabet,
  kOverflow,
  kInconsistent,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace palrich
