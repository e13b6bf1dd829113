#pragma once

#include <stdexcept>
#include <string>

namespace hodgeci {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* An index (cohomological degree, tower level, split part) outside its valid range. */
struct RangeError : Error {
    using Error::Error;
};

/* Dimensions of the participating varieties do not fit together. */
struct DimensionError : Error {
    using Error::Error;
};

/* A variety or ambient description that is malformed (too many degrees, degree < 1, ...). */
struct SpecError : Error {
    using Error::Error;
};

/* Internal invariant broken: negative dimension after subtraction, asymmetric middle table,
   memo collision with a different value.  Always a bug or invalid input tower. */
struct ConsistencyError : Error {
    using Error::Error;
};

/* Checked integer arithmetic left the representable range. */
struct OverflowError : Error {
    using Error::Error;
};

/* Structured input (ambient file, CLI argument) does not match the expected schema. */
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace hodgeci
