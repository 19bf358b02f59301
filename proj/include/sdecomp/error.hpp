#ifndef SDECOMP_ERROR_HPP
#define SDECOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdecomp {

enum class ErrorKind {
    CompositeP,
    FieldTooLarge,
    DivisionByZero,
    EmptyInput,
    ContextMismatch,
    ZeroDilation,
    NotADivisor,
    DegenerateD,
    TrivialCharacter,
    HypothesisViolated,
    DuplicateElements,
    InternalProofFailure,
    FieldTooLargeForExhaustive,
    BudgetExceeded,
    PTooSmall,
    NotAProperDivisor,
    NotAPrimePower,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace sdecomp

#endif  // SDECOMP_ERROR_HPP
