#pragma once

#include <stdexcept>
#include <string>

namespace fedcova {

// Base class for every recoverable failure raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FEDCOVA_DEFINE_ERROR(Name)                           \
  struct Name : Error {                                      \
    explicit Name(const std::string& msg) : Error(msg) {}    \
  }

FEDCOVA_DEFINE_ERROR(NotPositiveDefinite);
FEDCOVA_DEFINE_ERROR(ConvergenceFailure);
FEDCOVA_DEFINE_ERROR(ShapeMismatch);
FEDCOVA_DEFINE_ERROR(InvalidArchitecture);
FEDCOVA_DEFINE_ERROR(TapeMismatch);
FEDCOVA_DEFINE_ERROR(NonFiniteGradient);
FEDCOVA_DEFINE_ERROR(ArchitectureMismatch);
FEDCOVA_DEFINE_ERROR(EmptyBlock);
FEDCOVA_DEFINE_ERROR(LabelOutOfRange);
FEDCOVA_DEFINE_ERROR(EmptyDataset);
FEDCOVA_DEFINE_ERROR(AllEmpty);
FEDCOVA_DEFINE_ERROR(CountMismatch);
FEDCOVA_DEFINE_ERROR(TooFewClasses);
FEDCOVA_DEFINE_ERROR(InvalidSpec);
FEDCOVA_DEFINE_ERROR(EmptyTestSet);
FEDCOVA_DEFINE_ERROR(ConfigParse);
FEDCOVA_DEFINE_ERROR(IoFailure);

#undef FEDCOVA_DEFINE_ERROR

}  // namespace fedcova
