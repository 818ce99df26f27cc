#pragma once

#include <stdexcept>
#include <string>

namespace sharptree {

// Every failure the library reports derives from Error; the CLI maps the
// category onto its exit code.
enum class ErrorCategory { input, property, resource, usage };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), category_(category), detail_(detail) {}

  ErrorCategory category() const noexcept { return category_; }
  /// The message without the class-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCategory category_;
  std::string detail_;
};

#define SHARPTREE_DEFINE_ERROR(Name, Category)                 \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what)                     \
        : Error(ErrorCategory::Category, #Name, what) {}       \
  }

SHARPTREE_DEFINE_ERROR(ParseError, input);
SHARPTREE_DEFINE_ERROR(NotATree, input);
SHARPTREE_DEFINE_ERROR(ZeroWeight, input);
SHARPTREE_DEFINE_ERROR(InvalidGraph, input);
SHARPTREE_DEFINE_ERROR(ResourceLimit, resource);
SHARPTREE_DEFINE_ERROR(NotAStar, usage);
SHARPTREE_DEFINE_ERROR(NotOddPath, usage);
SHARPTREE_DEFINE_ERROR(NotApplicable, usage);
SHARPTREE_DEFINE_ERROR(NotInClassT, usage);
SHARPTREE_DEFINE_ERROR(NonPositiveWeights, usage);
SHARPTREE_DEFINE_ERROR(DimensionMismatch, usage);
SHARPTREE_DEFINE_ERROR(SingularCore, property);
SHARPTREE_DEFINE_ERROR(ToleranceTooTight, property);
SHARPTREE_DEFINE_ERROR(NoPositiveEigenvalue, property);

#undef SHARPTREE_DEFINE_ERROR

}  // namespace sharptree
