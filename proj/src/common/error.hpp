#pragma once

#include <stdexcept>
#include <string>

namespace lexlab {

// Every recoverable failure in the library carries one of these codes so the
// C surface can translate it into a stable status value.
enum class ErrorCode {
  kParse,
  kValidation,
  kUnknownKey,
  kRange,
  kGenerationExhausted,
  kEmptyLexicon,
  kEmptyCorpus,
  kEmptyClass,
  kAcquisitionNotFired,
  kDisabled,
  kInsufficientGrammar,
  kSeedCollision,
  kIo,
  kInvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace lexlab
