#pragma once

#include <stdexcept>
#include <string>

namespace aclab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderCapExceeded : Error {
    using Error::Error;
};
struct InvalidPermutation : Error {
    using Error::Error;
};
struct UnknownSpec : Error {
    using Error::Error;
};
struct NotNormal : Error {
    using Error::Error;
};
struct NotAbelian : Error {
    using Error::Error;
};
struct SearchBudgetExceeded : Error {
    using Error::Error;
};
struct StateCapExceeded : Error {
    using Error::Error;
};
struct NotGenerating : Error {
    using Error::Error;
};
struct NotNormallyGenerating : Error {
    using Error::Error;
};
struct VectorTooShort : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct NotCoprime : Error {
    using Error::Error;
};
struct NotPrimePower : Error {
    using Error::Error;
};
struct WeightNotOne : Error {
    using Error::Error;
};
struct WeightTooLarge : Error {
    using Error::Error;
};
struct RangeError : Error {
    using Error::Error;
};
struct AlphaNotUnit : Error {
    using Error::Error;
};
struct SizeCapExceeded : Error {
    using Error::Error;
};

// Parse failures carry a 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace aclab
