#pragma once

#include <stdexcept>
#include <string>

namespace qdeform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QDEFORM_ERROR(Name)                 \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

QDEFORM_ERROR(DivisionByZero);
QDEFORM_ERROR(SingularSubstitution);
QDEFORM_ERROR(SingularLimit);
QDEFORM_ERROR(DimensionMismatch);
QDEFORM_ERROR(SingularMatrix);
QDEFORM_ERROR(SlotError);
QDEFORM_ERROR(NotOrientable);
QDEFORM_ERROR(NotConfluent);
QDEFORM_ERROR(NotASubalgebra);
QDEFORM_ERROR(AxiomFailure);
QDEFORM_ERROR(QuotientMismatch);
QDEFORM_ERROR(HomFailure);
QDEFORM_ERROR(ParseError);
QDEFORM_ERROR(SchemaError);
QDEFORM_ERROR(LookupError);

#undef QDEFORM_ERROR

}  // namespace qdeform
