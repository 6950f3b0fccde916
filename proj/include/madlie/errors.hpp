#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace madlie {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad syntax, invalid ring/algebra data, violated
// preconditions that a caller could have checked.  CLI exit code 2.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// A configured resource limit (term count, basis size, ...) was hit.
// Not a wrong answer: the computation was abandoned.  CLI exit code 3.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// Violation of an internal invariant.  Always a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

// Soft limits checked by the expensive kernels.
struct Limits {
    std::size_t max_terms = 100000;  // per ring element
    std::size_t max_basis = 1000;    // Groebner basis size
};

}  // namespace madlie
