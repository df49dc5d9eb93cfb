#pragma once

#include <stdexcept>
#include <string>

namespace cmpz {

enum class ErrorCode {
  domain,            // argument outside a function's mathematical domain
  inadmissible,      // (lambda, nu) does not define a distribution
  resource_limit,    // term cap reached before the tolerance was certified
  overflow,          // non-finite intermediate
  index_out_of_range,
  invalid_argument,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cmpz
