#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sympal {

enum class Errc {
  NotPrime,
  ZeroArgument,
  NotGenerator,
  NoEmbedding,
  FieldTooLarge,
  MixedField,
  Singular,
  NotSimilitude,
  DimensionMismatch,
  CapExceeded,
  Unverified,
  NoTransvection,
  CharTooSmall,
  WitnessCheckFailed,
  NoOrderMatch,
  InvalidParams,
  NoInvariantForm,
  NotIrreducible,
  InvalidProfile,
  TwistBreaksRegularity,
  NotSubgroup,
  HypothesisFailed,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Thrown by enumeration routines when the element count passes the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t reached, std::size_t cap)
      : Error(Errc::CapExceeded, "reached " + std::to_string(reached) +
                                     " elements (cap " + std::to_string(cap) + ")"),
        reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace sympal
