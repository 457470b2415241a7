#ifndef BORNOLAB_ERRORS_HPP
#define BORNOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bornolab {

enum class Errc {
  NotAPoset,
  NoMeet,
  NoJoin,
  NoBotTop,
  NotMonotone,
  NotJoinPreserving,
  NotIdealMorphism,
  NotAnIdeal,
  NoCoverage,
  NoLegCoverage,
  NotRepresentable,
  BasisMismatch,
  GroundMismatch,
  UnsupportedReduct,
  UnsupportedComposition,
  TooLarge,
  ParseError,
  DuplicateName,
  UnresolvedReference,
  UnknownCommand,
};

const char* errc_name(Errc c);

/** Exception carrying a structured error code alongside the message. */
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

} // namespace bornolab

#endif
