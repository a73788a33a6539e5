#pragma once

#include <stdexcept>
#include <string>

namespace abelcyc {

enum class ErrorCode {
  alphabet_mismatch,
  index_out_of_range,
  empty_input,
  invalid_exponent,
  unsupported_feature,
  prolongability,
  catalog,
  invalid_length,
  unsupported_alphabet,
  invalid_task,
  search_exhausted,
  parse,
  io,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this one exception type; callers
// that need to distinguish failure classes switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace abelcyc
