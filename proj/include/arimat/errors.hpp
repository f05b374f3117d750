#pragma once

#include <stdexcept>
#include <string>

namespace arimat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfiniteQuotientError : Error {
    using Error::Error;
};
struct IllDefinedHomError : Error {
    using Error::Error;
};
struct NotWeaklyArithmeticError : Error {
    using Error::Error;
};
struct InvalidStructureError : Error {
    using Error::Error;
};
struct NotSimplicialError : Error {
    using Error::Error;
};
struct NoUniqueMinError : Error {
    using Error::Error;
};
struct NoUpperBoundError : Error {
    using Error::Error;
};
struct NonUniqueMeetError : Error {
    using Error::Error;
};
struct PartialMultiplicityError : Error {
    using Error::Error;
};
struct EmptyComplexError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace arimat
