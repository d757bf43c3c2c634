#include "palrich/error.hpp"

namespace palrich {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kParseError: return "ParseError";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotProlongable: return "NotProlongable";
    case Errc::kImageTooSlow: return "ImageTooSlow";
    case Errc::kEmptyBlock: return "EmptyBlock";
    case Errc::kDirectiveExhausted: return "DirectiveExhausted";
    case Errc::kWordTooShort: return "WordTooShort";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kFactorAbsent: return "FactorAbsent";
    case Errc::kSingleOccurrence: return "SingleOccurrence";
    case Errc::kNoOccurrenceData: return "NoOccurrenceData";
    case Errc::kPalindromicInput: return "PalindromicInput";
    case Errc::kNotAWalk: return "NotAWalk";
    case Errc::kNoSpecialVertices: return "NoSpecialVertices";
    case Errc::kUnstableIndex: return "UnstableIndex";
    case Errc::kNotApplicable: return "NotApplicable";
    case Errc::kNotAPalindrome: return "NotAPalindrome";
    case Errc::kWindowTooShort: return "WindowTooShort";
    case Errc::kStabilizationFailed: return "StabilizationFailed";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kUnsupportedAlphabet: return "UnsupportedAlphabet";
    case Errc::kOverflow: return "Overflow";
    case Errc::kInconsistent: return "Inconsistent";
  }
  return "Unknown";
}

}  // namespace palrich
