#pragma once

#include <stdexcept>
#include <string>

namespace symm {

/// Base of every domain error raised by the library. `kind()` is the stable
/// name reported in structured CLI error records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SYMM_DEFINE_ERROR(Name)                                                    \
  class Name : public Error {                                                      \
   public:                                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {}                 \
  }

SYMM_DEFINE_ERROR(DomainError);
SYMM_DEFINE_ERROR(PreconditionError);
SYMM_DEFINE_ERROR(IntegralityViolation);
SYMM_DEFINE_ERROR(UnsupportedClass);
SYMM_DEFINE_ERROR(OutOfRegime);
SYMM_DEFINE_ERROR(PoleError);
SYMM_DEFINE_ERROR(NoConvergence);
SYMM_DEFINE_ERROR(DivergentInner);
SYMM_DEFINE_ERROR(ConstraintError);

#undef SYMM_DEFINE_ERROR

}  // namespace symm
