#pragma once

#include <stdexcept>
#include <string>

namespace pxad {

// Error taxonomy shared across the library. kind() is the stable
// machine-readable tag the CLI prints as `error_kind=<kind>`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PXAD_DEFINE_ERROR(NAME, KIND)                             \
  class NAME : public Error {                                     \
   public:                                                        \
    explicit NAME(const std::string& what) : Error(KIND, what) {} \
  }

PXAD_DEFINE_ERROR(UsageError, "usage");
PXAD_DEFINE_ERROR(ConfigError, "config");
PXAD_DEFINE_ERROR(DimensionError, "dimension");
PXAD_DEFINE_ERROR(NumericError, "numeric");
PXAD_DEFINE_ERROR(LengthError, "length");
PXAD_DEFINE_ERROR(VocabularyError, "vocab");
PXAD_DEFINE_ERROR(ParseError, "parse");
PXAD_DEFINE_ERROR(SchemaError, "schema");
PXAD_DEFINE_ERROR(FormatError, "format");
PXAD_DEFINE_ERROR(CorruptionError, "corruption");
PXAD_DEFINE_ERROR(TrainingError, "training");
PXAD_DEFINE_ERROR(IoError, "io");

#undef PXAD_DEFINE_ERROR

}  // namespace pxad
