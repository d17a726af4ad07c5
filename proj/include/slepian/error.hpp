#pragma once

#include <stdexcept>
#include <string>

namespace slepian {

enum class ErrorCode {
  InvalidArgument = 1,
  InvalidRegion = 2,
  Numerical = 3,
  IllConditioned = 4,
  InvalidConfiguration = 5,
  Parse = 6,
  Io = 7,
};

// Every failure raised by the library carries one of the codes above so the C
// layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace slepian
