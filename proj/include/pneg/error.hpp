#pragma once

#include <stdexcept>
#include <string>

namespace pneg {

/// Failure categories raised by simplex construction and the operators.
enum class Errc {
  EmptyInput,
  EntryOutOfRange,
  SumNotOne,
  LengthMismatch,
  DegenerateDimension,
  UniformInput,
  UnknownTable,
  InvalidArgument,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::SumNotOne: return "SumNotOne";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DegenerateDimension: return "DegenerateDimension";
    case Errc::UniformInput: return "UniformInput";
    case Errc::UnknownTable: return "UnknownTable";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

/// Exception carrying an Errc; the message names the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pneg
