#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sympal/error.hpp"

namespace sympal::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kParse = 1,         // malformed input or flags
  kPrecondition = 2,  // InvalidParams, CharTooSmall, NoTransvection, ...
  kCap = 3,           // CapExceeded or Unverified: raise the cap
  kCollision = 4,     // regularity found equal n!-th powers
  kCounterexample = 5,
  kInternal = 6,      // a witness failed its own verification
};

int exit_code(Errc code) noexcept;

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used to name enumeration cache files.
std::uint64_t fnv1a(std::string_view bytes) noexcept;

}  // namespace sympal::cli
