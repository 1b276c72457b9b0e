// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace arcspace
{

// Every failure raised by the library carries a stable machine-readable class
// name (used verbatim by the CLI) next to the human message.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string &msg) : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string &kind() const noexcept
    {
        return kind_;
    }

private:
    std::string kind_;
};

#define ARCSPACE_DEFINE_ERROR(Name)                                                                                    \
    struct Name : Error {                                                                                              \
        explicit Name(const std::string &msg) : Error(#Name, msg) {}                                                   \
    };

ARCSPACE_DEFINE_ERROR(NotAUnit)
ARCSPACE_DEFINE_ERROR(NotASquare)
ARCSPACE_DEFINE_ERROR(NonUnitRadicand)
ARCSPACE_DEFINE_ERROR(ArityMismatch)
ARCSPACE_DEFINE_ERROR(BadSelection)
ARCSPACE_DEFINE_ERROR(IndeterminateOrder)
ARCSPACE_DEFINE_ERROR(IndeterminateResidualOrder)
ARCSPACE_DEFINE_ERROR(PrecisionExhausted)
ARCSPACE_DEFINE_ERROR(DivisibilityFailure)
ARCSPACE_DEFINE_ERROR(NotOnStratum)
ARCSPACE_DEFINE_ERROR(NotInZdStar)
ARCSPACE_DEFINE_ERROR(NotASolution)
ARCSPACE_DEFINE_ERROR(UnsupportedShape)
ARCSPACE_DEFINE_ERROR(InsufficientApproximation)
ARCSPACE_DEFINE_ERROR(NoMinor)
ARCSPACE_DEFINE_ERROR(InvalidWeights)
ARCSPACE_DEFINE_ERROR(InvalidArgument)
ARCSPACE_DEFINE_ERROR(InternalInvariant)

#undef ARCSPACE_DEFINE_ERROR

class ParseError : public Error
{
public:
    ParseError(const std::string &msg, int line, int column)
        : Error("ParseError", std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line),
          column_(column)
    {
    }
    int line() const noexcept
    {
        return line_;
    }
    int column() const noexcept
    {
        return column_;
    }

private:
    int line_;
    int column_;
};

} // namespace arcspace
