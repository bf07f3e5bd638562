#ifndef SEMIDEC_ERRORS_HPP
#define SEMIDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semidec {

enum class Errc {
    NotPrime,
    NoIrreducibleFound,
    OrderOverflow,
    DivideByZero,
    FactorizationBudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    DuplicatePoint,
    DegenerateProblem,
    BudgetExceeded,
    InvalidParameters,
    ShapeMismatch,
    BudgetExceedsLength,
    PreconditionViolated,
    ParseError,
};

inline const char* errcName(Errc c)
{
    switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoIrreducibleFound: return "NoIrreducibleFound";
    case Errc::OrderOverflow: return "OrderOverflow";
    case Errc::DivideByZero: return "DivideByZero";
    case Errc::FactorizationBudgetExceeded: return "FactorizationBudgetExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::DegenerateProblem: return "DegenerateProblem";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BudgetExceedsLength: return "BudgetExceedsLength";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace semidec

#endif
