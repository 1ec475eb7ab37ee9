#pragma once

#include <stdexcept>
#include <string>

namespace walklab {

// Base of every error the library raises on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WALKLAB_DEFINE_ERROR(Name)    \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

WALKLAB_DEFINE_ERROR(MixedRadicand);
WALKLAB_DEFINE_ERROR(DivisionByZero);
WALKLAB_DEFINE_ERROR(NotIrrational);
WALKLAB_DEFINE_ERROR(InvalidDigits);
WALKLAB_DEFINE_ERROR(NotBrNumber);
WALKLAB_DEFINE_ERROR(AlphabetMismatch);
WALKLAB_DEFINE_ERROR(UnknownFixture);
WALKLAB_DEFINE_ERROR(CheckFailed);
WALKLAB_DEFINE_ERROR(OddM);
WALKLAB_DEFINE_ERROR(NotProlongable);
WALKLAB_DEFINE_ERROR(NoReturn);
WALKLAB_DEFINE_ERROR(ParseError);

#undef WALKLAB_DEFINE_ERROR

}  // namespace walklab
