#pragma once

#include <stdexcept>
#include <string>

namespace triq {

inline constexpr const char* kVersion = "0.1.0";

// Library-wide error type. Everything recoverable throws this; messages name
// the offending node/field so callers can report a structured failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace triq
