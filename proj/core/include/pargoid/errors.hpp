#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pargoid {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

#define PARGOID_DECLARE_ERROR(Name) \
    class Name : public Error {     \
    public:                         \
        using Error::Error;         \
    }

PARGOID_DECLARE_ERROR(NotARedex);
PARGOID_DECLARE_ERROR(UnboundVariable);
PARGOID_DECLARE_ERROR(UnknownConstant);
PARGOID_DECLARE_ERROR(WitnessNotUndefined);
PARGOID_DECLARE_ERROR(NotFinite);
PARGOID_DECLARE_ERROR(NoDesignatedCombinators);
PARGOID_DECLARE_ERROR(MissingLeftPassive);
PARGOID_DECLARE_ERROR(DuplicateVariable);
PARGOID_DECLARE_ERROR(PrerequisiteUndefined);
PARGOID_DECLARE_ERROR(LawInstanceViolated);
PARGOID_DECLARE_ERROR(NotANormalForm);
PARGOID_DECLARE_ERROR(ParseError);
PARGOID_DECLARE_ERROR(UnknownElementName);
PARGOID_DECLARE_ERROR(DuplicateEntry);

#undef PARGOID_DECLARE_ERROR

} // namespace pargoid
