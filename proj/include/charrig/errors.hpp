#pragma once

#include <stdexcept>
#include <string>

namespace charrig {

/// Numeric codes shared with the C API (see charrig.h).
enum class ErrorCode : int {
  kOk = 0,
  kParse = 1,
  kFaceClosure = 2,
  kDuplicate = 3,
  kDegree = 4,
  kShape = 5,
  kRing = 6,
  kMismatch = 7,
  kNotACycle = 8,
  kNotInImage = 9,
  kGeometryBudget = 10,
  kDimension = 11,
  kIo = 12,
  kInvalidArgument = 13,
  kInternal = 14,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define CHARRIG_DEFINE_ERROR(Name, Code)                              \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

CHARRIG_DEFINE_ERROR(ParseError, kParse)
CHARRIG_DEFINE_ERROR(FaceClosureError, kFaceClosure)
CHARRIG_DEFINE_ERROR(DuplicateError, kDuplicate)
CHARRIG_DEFINE_ERROR(DegreeError, kDegree)
CHARRIG_DEFINE_ERROR(ShapeError, kShape)
CHARRIG_DEFINE_ERROR(RingError, kRing)
CHARRIG_DEFINE_ERROR(MismatchError, kMismatch)
CHARRIG_DEFINE_ERROR(NotACycle, kNotACycle)
CHARRIG_DEFINE_ERROR(NotInImage, kNotInImage)
CHARRIG_DEFINE_ERROR(GeometryBudgetExceeded, kGeometryBudget)
CHARRIG_DEFINE_ERROR(DimensionError, kDimension)
CHARRIG_DEFINE_ERROR(IoError, kIo)
CHARRIG_DEFINE_ERROR(InvalidArgument, kInvalidArgument)
CHARRIG_DEFINE_ERROR(InternalError, kInternal)

#undef CHARRIG_DEFINE_ERROR

/// Internal consistency check; failure is a bug, never an input problem.
#define CHARRIG_ASSERT(cond, msg)                                   \
  do {                                                              \
    if (!(cond)) throw ::charrig::InternalError(std::string(msg)); \
  } while (0)

}  // namespace charrig
