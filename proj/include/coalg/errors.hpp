#pragma once

#include <stdexcept>
#include <string>

namespace coalg {

/// Malformed or ill-typed input: bad scalars, indices out of range, axiom
/// violations in a supplied structure, mismatched ambient spaces.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The analysis is not supported for this input (characteristic too small,
/// non-split semisimple quotient). Not a bug, not bad input.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same object disagreed. Always an
/// arithmetic or implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace coalg
