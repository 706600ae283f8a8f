#pragma once

#include <stdexcept>
#include <string>

namespace apgate {

/// Invalid input or configuration. The CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to meet its accuracy contract (exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define APGATE_DEFINE_ERROR(Name, Base) \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  }

APGATE_DEFINE_ERROR(DriveOutOfRange, ConfigError);
APGATE_DEFINE_ERROR(DeltaOmegaTooLarge, ConfigError);
APGATE_DEFINE_ERROR(NoSolution, ConfigError);
APGATE_DEFINE_ERROR(BinMismatch, ConfigError);
APGATE_DEFINE_ERROR(DimensionMismatch, ConfigError);
APGATE_DEFINE_ERROR(ConfigMismatch, ConfigError);

APGATE_DEFINE_ERROR(GridTooNarrow, NumericalError);
APGATE_DEFINE_ERROR(GridTooCoarse, NumericalError);
APGATE_DEFINE_ERROR(NoConvergence, NumericalError);
APGATE_DEFINE_ERROR(NonBracketed, NumericalError);

#undef APGATE_DEFINE_ERROR

}  // namespace apgate
