#pragma once

#include <stdexcept>
#include <string>

namespace qcodim {

// Malformed input text (JSON, CSV, numbers).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain invariant (shapes, rank arrays, bars).
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Never raised on valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcodim
