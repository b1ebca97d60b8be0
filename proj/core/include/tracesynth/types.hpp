#ifndef TRACESYNTH_TYPES_HPP
#define TRACESYNTH_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracesynth {

using StateId = std::int32_t;
using ActionId = std::int32_t;
using Rank = std::int32_t;

/// A word is a sequence of action ids relative to some alphabet.
using Word = std::vector<ActionId>;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input data: unknown action, malformed automaton, bad distribution.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed instance or report file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A bounded exploration exceeded its state cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

} // namespace tracesynth

#endif
