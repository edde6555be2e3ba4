#pragma once

#include <stdexcept>
#include <string>

namespace hgg {

// Bad argument values (non-prime p, zero m, mismatched lengths, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured budget (enumeration size, search nodes, recursion size)
// would be exceeded.  Message carries the numbers involved.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is structurally valid but outside what the exact representation
// supports (e.g. tensoring a point at a non-materializable angle).
struct unsupported_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal contract that construction should have guaranteed failed.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hgg
