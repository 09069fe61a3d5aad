#ifndef FINMAX_ERRORS_HPP
#define FINMAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finmax {

/// Error category carried by every exception thrown from this library.
enum class ErrorCode {
  invalid_argument,  ///< bad sizes, infeasible inputs, malformed config
  evaluation,        ///< a subfunction returned a non-finite value/gradient
  infeasible,        ///< an LP or feasibility system has no solution
  unbounded,         ///< an LP is unbounded below
  io,                ///< file read/write failure
  internal,          ///< invariant violation inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_argument, msg);
}

[[noreturn]] inline void throw_eval(const std::string& msg) {
  throw Error(ErrorCode::evaluation, msg);
}

}  // namespace finmax

#endif  // FINMAX_ERRORS_HPP
