#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctk {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CTK_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

CTK_DEFINE_ERROR(CycleError);
CTK_DEFINE_ERROR(IndexError);
CTK_DEFINE_ERROR(ParamError);
CTK_DEFINE_ERROR(SizeError);
CTK_DEFINE_ERROR(SingletonError);
CTK_DEFINE_ERROR(EmptyPartsError);
CTK_DEFINE_ERROR(EmptyPosetError);
CTK_DEFINE_ERROR(ShapeError);
CTK_DEFINE_ERROR(UsageError);
CTK_DEFINE_ERROR(CarrierMismatch);
CTK_DEFINE_ERROR(ValuationError);
CTK_DEFINE_ERROR(UnknownCheck);
CTK_DEFINE_ERROR(UnsupportedFeature);
CTK_DEFINE_ERROR(FormatError);

#undef CTK_DEFINE_ERROR

/// Formula syntax error; `position` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ctk
