#pragma once

#include <stdexcept>
#include <string>

namespace fatlas {

/// Coarse category used to map failures onto CLI exit codes.
enum class ErrorCategory {
    usage = 1,         // bad invocation
    parse = 2,         // surface source could not be parsed/evaluated
    precondition = 3,  // operation preconditions not met (adapted coords, kind, ...)
    numerical = 4,     // internal consistency or branch-selection failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), category_(cat), code_(std::move(code)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorCategory category_;
    std::string code_;
};

#define FATLAS_ERROR(NAME, CATEGORY)                                        \
    class NAME : public Error {                                             \
    public:                                                                 \
        explicit NAME(const std::string& what)                              \
            : Error(ErrorCategory::CATEGORY, #NAME, what) {}                \
    }

FATLAS_ERROR(UsageError, usage);

// jets
FATLAS_ERROR(JetShapeMismatch, precondition);
FATLAS_ERROR(DivisionBySingularJet, precondition);
FATLAS_ERROR(DomainError, precondition);
FATLAS_ERROR(OrderExceeded, precondition);
FATLAS_ERROR(NotDivisibleByV, precondition);

// surface DSL
FATLAS_ERROR(SyntaxError, parse);
FATLAS_ERROR(UnknownIdentifier, parse);
FATLAS_ERROR(NonIntegerExponent, parse);
FATLAS_ERROR(InvalidSurface, parse);
FATLAS_ERROR(PointOutsideDomain, precondition);

// frames and invariants
FATLAS_ERROR(AdaptedCoordinateViolation, precondition);
FATLAS_ERROR(DegenerateFrame, precondition);
FATLAS_ERROR(NotSingular, precondition);
FATLAS_ERROR(KindMismatch, precondition);
FATLAS_ERROR(NotParabolic, precondition);
FATLAS_ERROR(BranchAmbiguity, numerical);

// classification
FATLAS_ERROR(InconsistentIdentifier, numerical);
FATLAS_ERROR(ClassifierDisagreement, numerical);
FATLAS_ERROR(PreconditionNotMet, precondition);
FATLAS_ERROR(ContactExceeded, precondition);

// height functions
FATLAS_ERROR(NotCorank2, precondition);
FATLAS_ERROR(CorankPropositionViolated, numerical);
FATLAS_ERROR(ClosedFormMismatch, numerical);
FATLAS_ERROR(ConsistencyViolation, numerical);

// tracing and corpus
FATLAS_ERROR(SeedNotOnCurve, precondition);
FATLAS_ERROR(SingularGradient, numerical);
FATLAS_ERROR(GenerationExhausted, numerical);

#undef FATLAS_ERROR

} // namespace fatlas
