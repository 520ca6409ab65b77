#pragma once

#include <stdexcept>
#include <string>

namespace shiarr {

// Bad caller input: malformed sequences, out-of-range parameters,
// sequences that fail a documented precondition.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A guaranteed-unique object was found zero or several times, an exact
// witness failed substitution, or similar. Always a bug, never bad input.
struct InternalInvariantError : std::logic_error {
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace shiarr
